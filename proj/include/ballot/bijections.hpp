#pragma once

#include "ballot/oracle.hpp"
#include "ballot/perm.hpp"
#include "ballot/report.hpp"

#include <vector>

namespace ballot::bijections {

/// Run structure of a one-descent ballot word x d y z with letter 1 in x:
/// x d split into maximal consecutive runs x_1 .. x_{k+1}, the complement
/// below the descent letter split into the interleaved runs y_1 .. y_k, and
/// the tail z = (d+1, ..., n).
struct RunDecomposition {
  std::vector<Word> x_runs;
  std::vector<Word> y_runs;
  Word tail;
  int descent_letter = 0;
};

/// Requires: ballot, exactly one descent, letter 1 before the descent.
RunDecomposition decompose_runs(const Permutation& p);

/// The x d y z -> y d x z rearrangement on one-descent ballot words.
Permutation swap_xy(const Permutation& p);

/// One-descent ballot word -> odd-order permutation with M = 1: the cycle of
/// interleaved run maxima, with the mostly-decreasing branch reached through
/// swap_xy and cycle reversal.
CycleDecomposition phi_d1(const Permutation& p);

/// Inverse of phi_d1 on odd-order permutations with M = 1.
Permutation psi_d1(const CycleDecomposition& d);

/// Ballot word of odd size 2n+1 with n descents -> the single (2n+1)-cycle
/// reading the word cyclically; its M equals n.
CycleDecomposition phi_max(const Permutation& p);

/// Inverse of phi_max: among the 2n+1 rotations of the cycle word, returns
/// the unique one that is ballot with n descents. Zero or multiple valid
/// rotations raise std::logic_error (either would falsify the underlying
/// uniqueness claim).
Permutation psi_max(const CycleDecomposition& d);

/// Word reversal, restated here with the statistic-transport contract:
/// maps S(n, d, t) onto S(n, n-1-d, t+2d-n+1); involution.
Permutation reversal_map(const Permutation& p);

/// Split of an even-size word from S(2n, n-1, 0) or S(2n, n, -1) into two
/// Dyck words whose concatenation is the input. split_index is |left|, odd.
struct DyckSplit {
  Word left;
  Word right;
  int split_index = 0;
};

DyckSplit dyck_split(const Permutation& p);

/// Exhaustive verification at size 2n that (i) Dyck words over every odd
/// k-subset number EC((k-1)/2), (ii) the subset + two-Dyck-words procedure
/// generates S(2n, n-1, 0) and S(2n, n, -1) bijectively, and (iii) those two
/// classes are equinumerous.
report::Finding dyck_count_check(int n, const oracle::EnumOptions& opts = {});

} // namespace ballot::bijections
