#include "ballot/bijections.hpp"

#include "ballot/closed_forms.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace ballot::bijections {

namespace {

struct XdyzParts {
  Word x;          // before the descent letter
  int descent_letter = 0;
  Word y;          // letters below the descent letter, after it
  Word z;          // the consecutive tail (descent_letter+1 .. n)
};

void require_one_descent_ballot(const Permutation& p, const char* who) {
  if (!is_ballot(p))
    throw std::domain_error(std::string(who) + ": input is not ballot");
  if (descent_count(p) != 1)
    throw std::domain_error(std::string(who) + ": input must have exactly one descent (got " +
                            std::to_string(descent_count(p)) + ")");
}

XdyzParts split_xdyz(const Permutation& p) {
  const Word& w = p.letters();
  const int n = p.size();
  int pos = -1;
  for (int i = 0; i + 1 < n; ++i)
    if (w[static_cast<std::size_t>(i)] > w[static_cast<std::size_t>(i + 1)]) {
      pos = i;
      break;
    }
  XdyzParts parts;
  parts.descent_letter = w[static_cast<std::size_t>(pos)];
  parts.x.assign(w.begin(), w.begin() + pos);
  for (int i = pos + 1; i < n; ++i) {
    const int v = w[static_cast<std::size_t>(i)];
    if (v < parts.descent_letter)
      parts.y.push_back(v);
    else
      parts.z.push_back(v);
  }
  return parts;
}

bool contains_one(const Word& w) { return std::find(w.begin(), w.end(), 1) != w.end(); }

Word consecutive_run(int from, int to) {
  Word run;
  for (int v = from; v <= to; ++v) run.push_back(v);
  return run;
}

} // namespace

RunDecomposition decompose_runs(const Permutation& p) {
  require_one_descent_ballot(p, "decompose_runs");
  XdyzParts parts = split_xdyz(p);
  if (!contains_one(parts.x))
    throw std::domain_error("decompose_runs: letter 1 must appear before the descent");

  Word xd = parts.x;
  xd.push_back(parts.descent_letter);

  RunDecomposition runs;
  runs.descent_letter = parts.descent_letter;
  runs.tail = parts.z;

  Word current{xd.front()};
  for (std::size_t i = 1; i < xd.size(); ++i) {
    if (xd[i] == current.back() + 1) {
      current.push_back(xd[i]);
    } else {
      runs.x_runs.push_back(std::move(current));
      current = {xd[i]};
    }
  }
  runs.x_runs.push_back(std::move(current));

  if (runs.x_runs.size() < 2)
    throw std::logic_error("decompose_runs: x d is a single consecutive run, so the word "
                           "has no descent; statistics are inconsistent");

  // y_i: the letters strictly between max(x_i) and min(x_{i+1}); y is an
  // increasing word so each group is a consecutive run.
  std::size_t start = 0;
  for (std::size_t i = 0; i + 1 < runs.x_runs.size(); ++i) {
    const int lo = runs.x_runs[i].back();
    const int hi = runs.x_runs[i + 1].front();
    Word group;
    while (start < parts.y.size() && parts.y[start] > lo && parts.y[start] < hi)
      group.push_back(parts.y[start++]);
    if (group.empty())
      throw std::logic_error("decompose_runs: empty y-run between consecutive x-runs");
    runs.y_runs.push_back(std::move(group));
  }
  if (start != parts.y.size())
    throw std::logic_error("decompose_runs: letters below the descent letter left over");
  return runs;
}

Permutation swap_xy(const Permutation& p) {
  require_one_descent_ballot(p, "swap_xy");
  const XdyzParts parts = split_xdyz(p);
  if (parts.x.empty() || parts.y.empty())
    throw std::domain_error("swap_xy: both segments around the descent must be nonempty");
  Word w = parts.y;
  w.push_back(parts.descent_letter);
  w.insert(w.end(), parts.x.begin(), parts.x.end());
  w.insert(w.end(), parts.z.begin(), parts.z.end());
  return Permutation(std::move(w));
}

CycleDecomposition phi_d1(const Permutation& p) {
  require_one_descent_ballot(p, "phi_d1");
  const XdyzParts parts = split_xdyz(p);
  if (contains_one(parts.x)) {
    const RunDecomposition runs = decompose_runs(p);
    Word cycle;
    for (std::size_t i = 0; i + 1 < runs.x_runs.size(); ++i) {
      cycle.push_back(runs.x_runs[i].back());
      cycle.push_back(runs.y_runs[i].back());
    }
    cycle.push_back(runs.x_runs.back().back());
    return CycleDecomposition::from_cycles({std::move(cycle)}, p.size());
  }
  // 1 sits after the descent: map the swapped word and reverse all cycles.
  return reverse_cycles(phi_d1(swap_xy(p)));
}

Permutation psi_d1(const CycleDecomposition& d) {
  if (!is_odd_order(d)) throw std::domain_error("psi_d1: input is not odd-order");
  if (m_statistic(d) != 1)
    throw std::domain_error("psi_d1: input must have M = 1 (got " +
                            std::to_string(m_statistic(d)) + ")");
  const std::vector<Word> nontrivial = d.nontrivial_cycles();
  if (nontrivial.size() != 1)
    throw std::domain_error("psi_d1: input must have exactly one nontrivial cycle");
  const Word& cycle = nontrivial.front();
  const CycleStats stats = cycle_stats(cycle);

  if (stats.cyclic_descents > stats.cyclic_ascents) {
    // Mostly decreasing: invert through the reversed (mostly increasing)
    // decomposition, then swap the segments back.
    return swap_xy(psi_d1(reverse_cycles(d)));
  }

  // Mostly increasing with one cyclic descent: the canonical min-first
  // rotation is strictly increasing, alternating x'_1 y'_1 ... x'_{k+1}.
  if (!std::is_sorted(cycle.begin(), cycle.end()))
    throw std::logic_error("psi_d1: canonical cycle with one cyclic descent is not increasing");
  const std::size_t len = cycle.size();
  const int d_letter = cycle.back();
  Word word;
  // x_i: runs (y'_{i-1}+1 .. x'_i) with y'_0 = 0.
  int prev_y = 0;
  for (std::size_t i = 0; i < len; i += 2) {
    const Word run = consecutive_run(prev_y + 1, cycle[i]);
    word.insert(word.end(), run.begin(), run.end());
    if (i + 1 < len) prev_y = cycle[i + 1];
  }
  // y_i: runs (x'_i+1 .. y'_i).
  for (std::size_t i = 0; i + 1 < len; i += 2) {
    const Word run = consecutive_run(cycle[i] + 1, cycle[i + 1]);
    word.insert(word.end(), run.begin(), run.end());
  }
  const Word tail = consecutive_run(d_letter + 1, d.size());
  word.insert(word.end(), tail.begin(), tail.end());
  return Permutation(std::move(word));
}

CycleDecomposition phi_max(const Permutation& p) {
  const int n = p.size();
  if (n % 2 == 0) throw std::domain_error("phi_max: size must be odd");
  if (!is_ballot(p)) throw std::domain_error("phi_max: input is not ballot");
  if (descent_count(p) != (n - 1) / 2)
    throw std::domain_error("phi_max: input must have (size-1)/2 = " +
                            std::to_string((n - 1) / 2) + " descents (got " +
                            std::to_string(descent_count(p)) + ")");
  CycleDecomposition result = CycleDecomposition::from_cycles({p.letters()}, n);
  if (m_statistic(result) != (n - 1) / 2)
    throw std::logic_error("phi_max: image cycle does not have M = (size-1)/2");
  return result;
}

Permutation psi_max(const CycleDecomposition& d) {
  if (d.cycles().size() != 1)
    throw std::domain_error("psi_max: input must be a single cycle");
  const Word& cycle = d.cycles().front();
  const int n = static_cast<int>(cycle.size());
  if (n % 2 == 0) throw std::domain_error("psi_max: cycle length must be odd");
  if (m_statistic(d) != (n - 1) / 2)
    throw std::domain_error("psi_max: cycle must have M = (length-1)/2 = " +
                            std::to_string((n - 1) / 2) + " (got " +
                            std::to_string(m_statistic(d)) + ")");

  Word found;
  int matches = 0;
  Word rotation(cycle.size());
  for (int shift = 0; shift < n; ++shift) {
    for (int i = 0; i < n; ++i)
      rotation[static_cast<std::size_t>(i)] = cycle[static_cast<std::size_t>((shift + i) % n)];
    if (descent_count(rotation) == (n - 1) / 2 && is_ballot(rotation)) {
      ++matches;
      found = rotation;
    }
  }
  if (matches != 1)
    throw std::logic_error("psi_max: expected exactly one ballot rotation with (length-1)/2 "
                           "descents, found " + std::to_string(matches));
  return Permutation(std::move(found));
}

Permutation reversal_map(const Permutation& p) { return reverse_word(p); }

DyckSplit dyck_split(const Permutation& p) {
  const int n2 = p.size();
  if (n2 % 2 != 0) throw std::domain_error("dyck_split: size must be even");
  const int n = n2 / 2;
  const int d = descent_count(p);
  const int t = t_statistic(p);
  const Word& w = p.letters();
  const Signature q = updown_signature(w);

  int split = -1;
  if (d == n - 1 && t == 0) {
    // Largest k with prefix sum over q_1..q_{k-1} equal to zero.
    int sum = 0;
    for (int k = 1; k <= n2 - 1; ++k) {
      if (sum == 0) split = k;
      sum += q[static_cast<std::size_t>(k - 1)];
    }
  } else if (d == n && t == -1) {
    // Smallest k with prefix sum over q_1..q_k equal to -1.
    int sum = 0;
    for (int k = 1; k <= n2 - 1; ++k) {
      sum += q[static_cast<std::size_t>(k - 1)];
      if (sum == -1) {
        split = k;
        break;
      }
    }
  } else {
    throw std::domain_error("dyck_split: input must have (d, T) = (n-1, 0) or (n, -1) for "
                            "size 2n (got d=" + std::to_string(d) + ", T=" + std::to_string(t) +
                            ")");
  }
  if (split < 1) throw std::logic_error("dyck_split: no split point found");

  DyckSplit result;
  result.split_index = split;
  result.left.assign(w.begin(), w.begin() + split);
  result.right.assign(w.begin() + split, w.end());
  if (!is_dyck_word(result.left) || !is_dyck_word(result.right))
    throw std::logic_error("dyck_split: split parts are not both Dyck words");
  return result;
}

report::Finding dyck_count_check(int n, const oracle::EnumOptions& opts) {
  report::Finding finding;
  finding.claim = "dyck-count/size=" + std::to_string(2 * n);
  finding.lhs_source = "subset + Dyck-pair generation";
  finding.rhs_source = "oracle";

  const int size = 2 * n;
  const oracle::SnProfile profile = oracle::profile_sn(size, opts);
  const Count class_a = profile.by_t(n - 1, 0);
  const Count class_b = profile.by_t(n, -1);

  Count generated_total = 0;
  std::set<Word> generated;
  bool ok = true;
  std::string note;

  for (int k = 1; k <= size - 1; k += 2) {
    const Count expected_dyck = closed_forms::eulerian_catalan((k - 1) / 2);
    for (std::size_t mask = 0; mask < (std::size_t{1} << size); ++mask) {
      if (std::popcount(mask) != k) continue;
      Word subset;
      for (int v = 1; v <= size; ++v)
        if (mask & (std::size_t{1} << (v - 1))) subset.push_back(v);
      Word complement;
      for (int v = 1; v <= size; ++v)
        if (!(mask & (std::size_t{1} << (v - 1)))) complement.push_back(v);

      std::vector<Word> left_words;
      Word left = subset;
      do {
        if (is_dyck_word(left)) left_words.push_back(left);
      } while (std::next_permutation(left.begin(), left.end()));
      if (Count(left_words.size()) != expected_dyck && ok) {
        ok = false;
        note = "Dyck words over subset of size " + std::to_string(k) + ": got " +
               std::to_string(left_words.size()) + ", expected EC=" + to_decimal(expected_dyck);
      }

      Word right = complement;
      do {
        if (!is_dyck_word(right)) continue;
        for (const Word& lw : left_words) {
          Word pi = lw;
          pi.insert(pi.end(), right.begin(), right.end());
          const int dd = descent_count(pi);
          const int tt = t_statistic(pi);
          const bool in_union = (dd == n - 1 && tt == 0) || (dd == n && tt == -1);
          if (!in_union && ok) {
            ok = false;
            note = "generated word outside both statistic classes: " + format_word(pi);
          }
          if (!generated.insert(pi).second && ok) {
            ok = false;
            note = "word generated twice: " + format_word(pi);
          }
          generated_total += 1;
        }
      } while (std::next_permutation(right.begin(), right.end()));
    }
  }

  finding.lhs = to_decimal(generated_total);
  finding.rhs = to_decimal(class_a + class_b);
  if (generated_total != class_a + class_b) ok = false;
  if (class_a != class_b) {
    ok = false;
    if (note.empty())
      note = "statistic classes differ: " + to_decimal(class_a) + " vs " + to_decimal(class_b);
  }
  finding.status = ok ? report::Status::confirmed : report::Status::mismatch;
  finding.note = note;
  return finding;
}

} // namespace ballot::bijections
