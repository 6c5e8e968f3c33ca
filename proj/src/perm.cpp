#include "ballot/perm.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ballot {

namespace {

void require_distinct_positive(const Word& w, const char* who) {
  std::set<int> seen;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] <= 0)
      throw std::invalid_argument(std::string(who) + ": letter at position " +
                                  std::to_string(i + 1) + " is not positive");
    if (!seen.insert(w[i]).second)
      throw std::invalid_argument(std::string(who) + ": duplicate letter " +
                                  std::to_string(w[i]));
  }
}

} // namespace

BinaryIndex::BinaryIndex(std::string bits) : bits_(std::move(bits)) {
  for (char c : bits_)
    if (c != '0' && c != '1')
      throw std::invalid_argument("BinaryIndex: invalid character '" + std::string(1, c) + "'");
}

int BinaryIndex::bit(int pos) const {
  if (pos < 1 || pos > size())
    throw std::out_of_range("BinaryIndex: position " + std::to_string(pos) +
                            " out of range 1.." + std::to_string(size()));
  return bits_[static_cast<std::size_t>(pos - 1)] == '1' ? 1 : 0;
}

Permutation::Permutation(Word letters) : letters_(std::move(letters)) {
  const int n = static_cast<int>(letters_.size());
  if (n < 1) throw std::invalid_argument("Permutation: size must be at least 1");
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0; i < n; ++i) {
    const int v = letters_[static_cast<std::size_t>(i)];
    if (v < 1 || v > n)
      throw std::invalid_argument("Permutation: letter " + std::to_string(v) +
                                  " at position " + std::to_string(i + 1) +
                                  " is outside 1.." + std::to_string(n));
    if (seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("Permutation: duplicate letter " + std::to_string(v));
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  Word w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(std::move(w));
}

namespace {

Word canonical_rotation(const Word& cycle) {
  const auto min_it = std::min_element(cycle.begin(), cycle.end());
  Word rotated;
  rotated.reserve(cycle.size());
  rotated.insert(rotated.end(), min_it, cycle.end());
  rotated.insert(rotated.end(), cycle.begin(), min_it);
  return rotated;
}

} // namespace

CycleDecomposition CycleDecomposition::from_cycles(std::vector<Word> cycles, int n) {
  if (n < 1) throw std::invalid_argument("from_cycles: size must be at least 1");
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (const Word& c : cycles) {
    if (c.empty()) throw std::invalid_argument("from_cycles: empty cycle");
    for (int v : c) {
      if (v < 1 || v > n)
        throw std::invalid_argument("from_cycles: letter " + std::to_string(v) +
                                    " is outside 1.." + std::to_string(n));
      if (seen[static_cast<std::size_t>(v)])
        throw std::invalid_argument("from_cycles: cycles are not disjoint at letter " +
                                    std::to_string(v));
      seen[static_cast<std::size_t>(v)] = 1;
    }
  }
  for (int v = 1; v <= n; ++v)
    if (!seen[static_cast<std::size_t>(v)]) cycles.push_back(Word{v});
  for (Word& c : cycles) c = canonical_rotation(c);
  std::sort(cycles.begin(), cycles.end(),
            [](const Word& a, const Word& b) { return a.front() < b.front(); });
  return CycleDecomposition(std::move(cycles), n);
}

CycleDecomposition CycleDecomposition::from_cycles(std::vector<Word> cycles) {
  std::size_t total = 0;
  for (const Word& c : cycles) total += c.size();
  if (total == 0) throw std::invalid_argument("from_cycles: no cycles");
  // Covering 1..total is enforced by the sized overload: any gap forces a
  // letter above the total.
  return from_cycles(std::move(cycles), static_cast<int>(total));
}

CycleDecomposition CycleDecomposition::identity(int n) { return from_cycles({}, n); }

std::vector<Word> CycleDecomposition::nontrivial_cycles() const {
  std::vector<Word> result;
  for (const Word& c : cycles_)
    if (c.size() >= 2) result.push_back(c);
  return result;
}

Signature updown_signature(const Word& w) {
  require_distinct_positive(w, "updown_signature");
  Signature q;
  q.reserve(w.size() > 0 ? w.size() - 1 : 0);
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    q.push_back(w[i] <= w[i + 1] ? +1 : -1);
  return q;
}

BinaryIndex index_of(const Word& w) {
  require_distinct_positive(w, "index_of");
  std::string bits;
  bits.reserve(w.size() > 0 ? w.size() - 1 : 0);
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    bits.push_back(w[i] > w[i + 1] ? '1' : '0');
  return BinaryIndex(std::move(bits));
}

int ascent_count(const Word& w) {
  int count = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] <= w[i + 1]) ++count;
  return count;
}

int descent_count(const Word& w) {
  int count = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) ++count;
  return count;
}

bool is_ballot(const Word& w) { return t_statistic(w) == 0; }

int t_statistic(const Word& w) {
  int sum = 0;
  int min_sum = 0; // T_0 = 0
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    sum += w[i] <= w[i + 1] ? +1 : -1;
    min_sum = std::min(min_sum, sum);
  }
  return min_sum;
}

bool is_dyck_word(const Word& w) {
  require_distinct_positive(w, "is_dyck_word");
  int sum = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    sum += w[i] <= w[i + 1] ? +1 : -1;
    if (sum < 0) return false;
  }
  return sum == 0;
}

Word reverse_word(const Word& w) { return Word(w.rbegin(), w.rend()); }

CycleDecomposition cycle_decomposition(const Permutation& p) {
  const int n = p.size();
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  std::vector<Word> cycles;
  for (int start = 1; start <= n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    Word cycle;
    int cur = start;
    do {
      seen[static_cast<std::size_t>(cur)] = 1;
      cycle.push_back(cur);
      cur = p.at(cur);
    } while (cur != start);
    cycles.push_back(std::move(cycle));
  }
  // Scanning starts at each cycle's minimum, so the result is canonical.
  return CycleDecomposition::from_cycles(std::move(cycles), n);
}

Permutation to_one_line(const CycleDecomposition& d) {
  Word letters(static_cast<std::size_t>(d.size()), 0);
  for (const Word& c : d.cycles())
    for (std::size_t i = 0; i < c.size(); ++i)
      letters[static_cast<std::size_t>(c[i] - 1)] = c[(i + 1) % c.size()];
  return Permutation(std::move(letters));
}

CycleStats cycle_stats(const Word& cycle) {
  if (cycle.empty()) throw std::invalid_argument("cycle_stats: empty cycle");
  require_distinct_positive(cycle, "cycle_stats");
  CycleStats stats;
  const std::size_t k = cycle.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (cycle[i] <= cycle[(i + 1) % k])
      ++stats.cyclic_ascents;
    else
      ++stats.cyclic_descents;
  }
  stats.m_value = std::min(stats.cyclic_ascents, stats.cyclic_descents);
  return stats;
}

int m_statistic(const CycleDecomposition& d) {
  int m = 0;
  for (const Word& c : d.cycles()) m += cycle_stats(c).m_value;
  return m;
}

bool is_odd_order(const CycleDecomposition& d) {
  for (const Word& c : d.cycles())
    if (c.size() % 2 == 0) return false;
  return true;
}

CycleDecomposition reverse_cycles(const CycleDecomposition& d) {
  std::vector<Word> reversed;
  reversed.reserve(d.cycles().size());
  for (const Word& c : d.cycles()) reversed.emplace_back(c.rbegin(), c.rend());
  return CycleDecomposition::from_cycles(std::move(reversed), d.size());
}

Word parse_word(const std::string& text) {
  const bool has_separator = text.find_first_of(", \t") != std::string::npos;
  Word w;
  if (has_separator) {
    std::string normalized = text;
    for (char& c : normalized)
      if (c == ',' || c == '\t') c = ' ';
    std::istringstream in(normalized);
    int v;
    while (in >> v) w.push_back(v);
    if (!in.eof())
      throw std::invalid_argument("parse_word: invalid letter in '" + text + "'");
  } else {
    // No separators: each character is a single-digit letter.
    for (char c : text) {
      if (c < '0' || c > '9')
        throw std::invalid_argument("parse_word: invalid character '" + std::string(1, c) + "'");
      w.push_back(c - '0');
    }
  }
  if (w.empty()) throw std::invalid_argument("parse_word: no letters");
  return w;
}

Permutation parse_one_line(const std::string& text) { return Permutation(parse_word(text)); }

std::string format_word(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i != 0) out += ' ';
    out += std::to_string(w[i]);
  }
  return out;
}

namespace {

std::vector<Word> parse_cycle_groups(const std::string& text) {
  std::vector<Word> cycles;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '(')
      throw std::invalid_argument("parse_cycles: expected '(' at position " + std::to_string(i + 1));
    const std::size_t close = text.find(')', i);
    if (close == std::string::npos)
      throw std::invalid_argument("parse_cycles: unterminated cycle");
    const std::string body = text.substr(i + 1, close - i - 1);
    Word cycle;
    std::string item;
    std::istringstream in(body);
    while (std::getline(in, item, ',')) {
      std::istringstream sub(item);
      int v;
      if (!(sub >> v))
        throw std::invalid_argument("parse_cycles: invalid letter '" + item + "'");
      cycle.push_back(v);
    }
    if (cycle.empty()) throw std::invalid_argument("parse_cycles: empty cycle");
    cycles.push_back(std::move(cycle));
    i = close + 1;
  }
  if (cycles.empty()) throw std::invalid_argument("parse_cycles: no cycles");
  return cycles;
}

} // namespace

CycleDecomposition parse_cycles(const std::string& text) {
  return CycleDecomposition::from_cycles(parse_cycle_groups(text));
}

CycleDecomposition parse_cycles(const std::string& text, int n) {
  return CycleDecomposition::from_cycles(parse_cycle_groups(text), n);
}

namespace {

std::string format_cycle_list(const std::vector<Word>& cycles) {
  std::string out;
  for (const Word& c : cycles) {
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i != 0) out += ',';
      out += std::to_string(c[i]);
    }
    out += ')';
  }
  return out;
}

} // namespace

std::string format_cycles(const CycleDecomposition& d) { return format_cycle_list(d.cycles()); }

std::string format_cycles_compact(const CycleDecomposition& d) {
  const std::vector<Word> nontrivial = d.nontrivial_cycles();
  if (nontrivial.empty()) return format_cycle_list(d.cycles());
  return format_cycle_list(nontrivial);
}

BinaryIndex parse_index(const std::string& text) { return BinaryIndex(text); }

} // namespace ballot
