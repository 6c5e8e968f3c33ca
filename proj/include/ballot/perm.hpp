#pragma once

#include <compare>
#include <string>
#include <vector>

namespace ballot {

/// A word of distinct positive letters. Not necessarily a permutation of
/// 1..n; Dyck words range over arbitrary subsets.
using Word = std::vector<int>;

/// Up-down signature: entry i is +1 for an ascent at position i+1 (1-based),
/// -1 for a descent. Length is one less than the word length.
using Signature = std::vector<int>;

/// Binary string encoding of an up-down signature: bit i = 1 exactly when
/// signature entry i is -1.
class BinaryIndex {
public:
  BinaryIndex() = default;
  explicit BinaryIndex(std::string bits);

  const std::string& str() const { return bits_; }
  int size() const { return static_cast<int>(bits_.size()); }
  bool empty() const { return bits_.empty(); }
  /// 1-based position.
  int bit(int pos) const;
  bool ends_in_zero() const { return !bits_.empty() && bits_.back() == '0'; }

  friend bool operator==(const BinaryIndex&, const BinaryIndex&) = default;
  friend auto operator<=>(const BinaryIndex& a, const BinaryIndex& b) {
    return a.bits_ <=> b.bits_;
  }

private:
  std::string bits_;
};

/// One-line word over exactly the letters 1..n, n >= 1.
class Permutation {
public:
  explicit Permutation(Word letters);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(letters_.size()); }
  /// 1-based position.
  int at(int pos) const { return letters_[static_cast<std::size_t>(pos - 1)]; }
  const Word& letters() const { return letters_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.letters_ <=> b.letters_;
  }

private:
  Word letters_;
};

struct CycleStats {
  int cyclic_ascents = 0;
  int cyclic_descents = 0;
  int m_value = 0;

  friend bool operator==(const CycleStats&, const CycleStats&) = default;
};

/// Disjoint cycles covering 1..n, held in canonical form: each cycle rotated
/// so its minimum is first, cycles sorted by minimum. Equality is structural.
class CycleDecomposition {
public:
  /// Cycles must cover {1..n} exactly, where n is the total length.
  static CycleDecomposition from_cycles(std::vector<Word> cycles);
  /// Letters of 1..n not mentioned become fixed points.
  static CycleDecomposition from_cycles(std::vector<Word> cycles, int n);
  static CycleDecomposition identity(int n);

  const std::vector<Word>& cycles() const { return cycles_; }
  int size() const { return n_; }
  /// Cycles of length >= 2, in canonical order.
  std::vector<Word> nontrivial_cycles() const;

  friend bool operator==(const CycleDecomposition&, const CycleDecomposition&) = default;

private:
  CycleDecomposition(std::vector<Word> cycles, int n) : cycles_(std::move(cycles)), n_(n) {}
  std::vector<Word> cycles_;
  int n_ = 0;
};

// ---- word statistics ----

Signature updown_signature(const Word& w);
BinaryIndex index_of(const Word& w);
int ascent_count(const Word& w);
int descent_count(const Word& w);

/// True iff every prefix of the signature has sum >= 0.
bool is_ballot(const Word& w);

/// min over k = 0..n-1 of the k-th prefix signature sum; always <= 0, and
/// zero exactly when the word is ballot.
int t_statistic(const Word& w);

/// All prefix signature sums >= 0 and total sum 0. Letters must be distinct
/// but need not form 1..k. True implies odd length.
bool is_dyck_word(const Word& w);

Word reverse_word(const Word& w);

inline Signature updown_signature(const Permutation& p) { return updown_signature(p.letters()); }
inline BinaryIndex index_of(const Permutation& p) { return index_of(p.letters()); }
inline int ascent_count(const Permutation& p) { return ascent_count(p.letters()); }
inline int descent_count(const Permutation& p) { return descent_count(p.letters()); }
inline bool is_ballot(const Permutation& p) { return is_ballot(p.letters()); }
inline int t_statistic(const Permutation& p) { return t_statistic(p.letters()); }
inline Permutation reverse_word(const Permutation& p) { return Permutation(reverse_word(p.letters())); }

// ---- cycle statistics ----

CycleDecomposition cycle_decomposition(const Permutation& p);
Permutation to_one_line(const CycleDecomposition& d);

/// Ascent/descent counts of the wrapped word c_1 c_2 ... c_k c_1. A single
/// element compares to itself with <=, so a fixed point is (1, 0, 0).
CycleStats cycle_stats(const Word& cycle);

/// Sum of min(cyclic ascents, cyclic descents) over all cycles.
int m_statistic(const CycleDecomposition& d);

/// True iff every cycle length is odd (equivalently, odd group order).
bool is_odd_order(const CycleDecomposition& d);

/// Each cycle's written order reversed, re-canonicalized. Involution; swaps
/// cyclic ascents and descents per cycle, so the m statistic is preserved.
CycleDecomposition reverse_cycles(const CycleDecomposition& d);

// ---- textual formats ----

/// Accepts space- or comma-separated integers ("1 4 3 5 2", "1,4,3,5,2"), or
/// a run of single digits ("14352") when no separator is present.
Word parse_word(const std::string& text);
Permutation parse_one_line(const std::string& text);

/// Space-separated letters.
std::string format_word(const Word& w);
inline std::string format_word(const Permutation& p) { return format_word(p.letters()); }

/// Parenthesized groups, e.g. "(1,3,9)(4,2,8,5,6)(7)".
CycleDecomposition parse_cycles(const std::string& text);
CycleDecomposition parse_cycles(const std::string& text, int n);

std::string format_cycles(const CycleDecomposition& d);
/// Omits fixed points; falls back to the full form for the identity.
std::string format_cycles_compact(const CycleDecomposition& d);

BinaryIndex parse_index(const std::string& text);

} // namespace ballot
