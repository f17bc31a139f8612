#pragma once

#include <string>

#include "melon/poly.hpp"

// Recursive polynomial families f, g, h, b of the banana / melonic
// deletion-contraction recursion, their two-parameter generalisations, and
// closed-form classes of necklace and clasped-necklace graphs.
//
// Unless stated otherwise every function returns its result in the S basis.
namespace melon::families {

enum class FamilyTag { F, G, H, B };

char family_name(FamilyTag tag) noexcept;
/// Accepts "f", "g", "h", "b" (either case).
FamilyTag parse_family(const std::string& name);

/// f_m = ((s+1)^m - (-1)^m) / (s+2), generated by f_{m+1} = (s+1) f_m + (-1)^m.
ClassPoly f_poly(int m);

/// f_m from the double binomial sum
///   sum_{j>=1} sum_{k=1}^{floor(m/2)} C(m-2k, j-1) s^j  (+1 when m is odd).
ClassPoly f_closed_form(int m);

/// g_{m,n} = n (s+1)^{m-1} - f_m.
ClassPoly g_mn_poly(int m, int n);
/// g_m = g_{m,m}; g_0 = 0.
ClassPoly g_poly(int m);

/// h_0 = 1, h_m = (s+1) f_{m-1}.
ClassPoly h_poly(int m);

/// b_{m,n} = n (s+1)^{m-1} + (s+1) f_m.
ClassPoly b_mn_poly(int m, int n);
/// Class of the m-banana, b_m = b_{m,m}; b_0 = 0.
ClassPoly b_poly(int m);

/// Dispatch on tag: f_m, g_m, h_m or b_m.
ClassPoly family_poly(FamilyTag tag, int m);

/// Degree-k coefficient (k <= 4) of f_m, g_{m,n} or b_{m,n} from the
/// parity-split closed forms. n is ignored for F. Returns 0 when k exceeds the
/// degree. Throws std::invalid_argument for k > 4, for H, or for m < 1.
BigInt coeff_closed_form(FamilyTag family, int m, int n, int k);

/// p_{m,n} = (s+1)^{m-1} + sum_{k=0}^{m-2} (-1)^{m-2-k} (n+k-1) (s+1)^k,
/// the cofactor of (s+1)(s+2) b_m^{n-2} in the clasped-necklace class.
ClassPoly p_mn_poly(int m, int n);

/// B_m = T(T+1) (T^{m-2} + sum_{k=0}^{m-3} (-1)^{m-3-k} (k+1) T^k), m >= 2.
/// Returned in the T basis.
ClassPoly banana_factored_form(int m);

/// T(T+1) sum_{k=0}^{m-2} (-1)^{m-2-k} T^k, which equals h_m (T+1), m >= 2.
/// Returned in the T basis.
ClassPoly h_times_t_plus_one_form(int m);

/// Class of the clasped necklace G'_{m,n}: n-1 m-bananas closed by a single
/// edge. Uses T(T+1) B_m^{n-2} (T^{m-1} + sum (-1)^{m-2-k} (n+k-1) T^k) for
/// m >= 2 and B_2 (S+2)^{n-2} for m = 1. Requires m >= 1, n >= 2.
ClassPoly clasped_necklace_class(int m, int n);

/// Class of the necklace G_{m,n} of n m-bananas. m = 1 and m = 2 use their
/// closed formulas; m >= 3 uses the deletion-contraction recursion in n.
/// Requires m >= 1, n >= 2.
ClassPoly necklace_class(int m, int n);

/// Necklace class computed purely by
///   U(G_{m,n}) = f_m U(G'_{m,n}) + g_m U(G_{m,n-1}) + h_m B_m^{n-1},
/// with U(G_{m,2}) = B_{2m}. Valid for every m >= 1, n >= 2.
ClassPoly necklace_class_by_recursion(int m, int n);

}  // namespace melon::families
