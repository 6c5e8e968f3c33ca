#pragma once

#include "ballot/count.hpp"
#include "ballot/perm.hpp"

namespace ballot::closed_forms {

/// Identifier plus human-readable validity range for a formula; evaluation
/// outside the range raises std::domain_error naming both.
struct FormulaDomain {
  const char* name;
  const char* valid_range;
};

[[noreturn]] void throw_out_of_domain(const FormulaDomain& domain, const std::string& got);

/// Eulerian number E(n, d): permutations of size n with d descents.
/// Conventions: E(0,0) = 1, zero for d < 0 or d >= max(n, 1). Memoized.
Count eulerian(int n, int d);

/// EC(n) = 2 E(2n, n-1) for n >= 1; EC(0) = 1 by definition.
Count eulerian_catalan(int n);

/// Total number of ballot permutations of size n: [(n-1)!!]^2 for even n,
/// n!! (n-2)!! for odd n, with (-1)!! = 1.
Count total_ballot(int n);

/// a(n, d) = (d+1) E(n-1, d): size-n permutations with d descents beginning
/// with an ascent.
Count a_formula(int n, int d);

/// b(n, 1) = 2 E(n-1, 1) = 2^n - 2n.
Count b1_formula(int n);

/// b(n, 2) = 3 E(n-1, 2) - 2 C(n,3) + C(n,2) - 1, for n >= 2.
Count b2_formula(int n);

/// b(n, 3) = 4 E(n-1, 3) - (C(n,3) - C(n,2) + 4) 2^(n-2)
///           - 22 C(n,5) + 16 C(n,4) - 4 C(n,3) + 2n, for n >= 4.
Count b3_formula(int n);

/// c(n, d): n-cycles with M = d. c(1,0) = 1; for odd n >= 3, zero when
/// d = 0 or d > (n-1)/2, else 2 E(n-1, d-1). Even n (no odd n-cycle) is out
/// of domain.
Count c_formula(int n, int d);

/// b(2m+1, m) = EC(m) for odd size 2m+1; rejects even sizes.
Count b_max_formula(int size);

/// b(2n, n-1) = 1/2 * sum over odd k of C(2n,k) EC((k-1)/2) EC((2n-k-1)/2).
Count b_2n_formula(int n);

/// p(2n+1, n-1) = 2 E(2n, n-2) + 1/6 * (triple-product sum over odd k, l),
/// for n >= 2.
Count p_second_last_formula(int n);

/// True when the index reduces (by trailing-zero stripping) to one of the
/// tabulated strings and n - 1 >= |r|.
bool ud_polynomial_supported(const BinaryIndex& r, int n);

/// Polynomial evaluation of UD(n, r) for the tabulated index strings.
/// Throws std::domain_error for unsupported strings or n out of range;
/// callers fall back to the enumeration oracle.
Count ud_polynomial(const BinaryIndex& r, int n);

/// The f(0110, n) closed form ships in two variants: `corrected` flips the
/// sign of the literal leading term (the literal form goes negative, e.g.
/// -64 at n = 5, and cannot be a count); `literal` keeps it for comparison.
enum class FClosedVariant { corrected, literal };

bool f_closed_supported(const BinaryIndex& r);

/// Closed forms for f(r, n), r in {10, 00, 110, 010, 0110}.
Count f_closed(const BinaryIndex& r, int n, FClosedVariant variant = FClosedVariant::corrected);

} // namespace ballot::closed_forms
