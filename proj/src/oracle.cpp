#include "ballot/oracle.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ballot::oracle {

namespace {

// Plain-uint64 accumulator used inside the enumeration loops; exact because
// every cell is bounded by n! <= 12! < 2^64.
struct RawProfile {
  int n = 0;
  std::vector<std::uint64_t> all_by_d;
  std::vector<std::uint64_t> ballot_by_d;
  std::vector<std::uint64_t> ascent_start_by_d;
  std::vector<std::uint64_t> descent_start_by_d;
  std::vector<std::uint64_t> oop_by_m;
  std::vector<std::uint64_t> ncycle_by_m;
  std::vector<std::uint64_t> by_d_t;
  std::vector<std::uint64_t> ballot_last_by_d_k;
  std::vector<std::uint64_t> index_dist;

  explicit RawProfile(int size = 0) : n(size) {
    if (n == 0) return;
    const std::size_t un = static_cast<std::size_t>(n);
    const std::size_t m_slots = un / 2 + 1;
    all_by_d.assign(un, 0);
    ballot_by_d.assign(un, 0);
    ascent_start_by_d.assign(un, 0);
    descent_start_by_d.assign(un, 0);
    oop_by_m.assign(m_slots, 0);
    ncycle_by_m.assign(m_slots, 0);
    by_d_t.assign(un * un, 0);
    ballot_last_by_d_k.assign(un * un, 0);
    index_dist.assign(std::size_t{1} << (un - 1), 0);
  }

  void add(const RawProfile& other) {
    auto merge = [](std::vector<std::uint64_t>& into, const std::vector<std::uint64_t>& from) {
      for (std::size_t i = 0; i < into.size(); ++i) into[i] += from[i];
    };
    merge(all_by_d, other.all_by_d);
    merge(ballot_by_d, other.ballot_by_d);
    merge(ascent_start_by_d, other.ascent_start_by_d);
    merge(descent_start_by_d, other.descent_start_by_d);
    merge(oop_by_m, other.oop_by_m);
    merge(ncycle_by_m, other.ncycle_by_m);
    merge(by_d_t, other.by_d_t);
    merge(ballot_last_by_d_k, other.ballot_last_by_d_k);
    merge(index_dist, other.index_dist);
  }
};

// One O(n) pass per permutation: word statistics from a left-to-right scan,
// cycle statistics from the standard visited walk. The walk starts each
// cycle at its minimum element, and M is rotation invariant.
struct Scanner {
  explicit Scanner(int n) : stamp(static_cast<std::size_t>(n), -1) {}

  void absorb(const Word& w, RawProfile& out) {
    const int n = out.n;
    int descents = 0;
    int sum = 0;
    int t_min = 0;
    std::uint64_t mask = 0;
    for (int i = 0; i + 1 < n; ++i) {
      if (w[static_cast<std::size_t>(i)] > w[static_cast<std::size_t>(i + 1)]) {
        ++descents;
        --sum;
        mask |= std::uint64_t{1} << i;
        if (sum < t_min) t_min = sum;
      } else {
        ++sum;
      }
    }

    ++epoch;
    int cycles = 0;
    int m_sum = 0;
    int first_len = 0;
    bool all_odd = true;
    for (int start = 0; start < n; ++start) {
      if (stamp[static_cast<std::size_t>(start)] == epoch) continue;
      ++cycles;
      int len = 0;
      int ca = 0;
      int cur = start;
      do {
        stamp[static_cast<std::size_t>(cur)] = epoch;
        ++len;
        if (cur + 1 <= w[static_cast<std::size_t>(cur)]) ++ca;
        cur = w[static_cast<std::size_t>(cur)] - 1;
      } while (cur != start);
      if (cycles == 1) first_len = len;
      if (len % 2 == 0) all_odd = false;
      m_sum += std::min(ca, len - ca);
    }

    const std::size_t ud = static_cast<std::size_t>(descents);
    out.all_by_d[ud] += 1;
    out.by_d_t[ud * static_cast<std::size_t>(n) + static_cast<std::size_t>(-t_min)] += 1;
    out.index_dist[static_cast<std::size_t>(mask)] += 1;
    if (t_min == 0) {
      out.ballot_by_d[ud] += 1;
      out.ballot_last_by_d_k[ud * static_cast<std::size_t>(n) +
                             static_cast<std::size_t>(w[static_cast<std::size_t>(n - 1)] - 1)] += 1;
    }
    if (n >= 2) {
      if (w[0] <= w[1])
        out.ascent_start_by_d[ud] += 1;
      else
        out.descent_start_by_d[ud] += 1;
    }
    if (all_odd) {
      out.oop_by_m[static_cast<std::size_t>(m_sum)] += 1;
      if (cycles == 1 && first_len == n) out.ncycle_by_m[static_cast<std::size_t>(m_sum)] += 1;
    }
  }

  std::vector<int> stamp;
  int epoch = -1;
};

SnProfile finalize(const RawProfile& raw) {
  SnProfile p;
  p.n = raw.n;
  auto lift = [](const std::vector<std::uint64_t>& from) {
    std::vector<Count> into(from.size());
    for (std::size_t i = 0; i < from.size(); ++i) into[i] = from[i];
    return into;
  };
  p.all_by_d = lift(raw.all_by_d);
  p.ballot_by_d = lift(raw.ballot_by_d);
  p.ascent_start_by_d = lift(raw.ascent_start_by_d);
  p.descent_start_by_d = lift(raw.descent_start_by_d);
  p.oop_by_m = lift(raw.oop_by_m);
  p.ncycle_by_m = lift(raw.ncycle_by_m);
  p.by_d_t = lift(raw.by_d_t);
  p.ballot_last_by_d_k = lift(raw.ballot_last_by_d_k);
  p.index_dist = lift(raw.index_dist);
  return p;
}

Count slot(const std::vector<Count>& v, int i) {
  if (i < 0 || static_cast<std::size_t>(i) >= v.size()) return 0;
  return v[static_cast<std::size_t>(i)];
}

} // namespace

Count SnProfile::ballot(int d) const { return slot(ballot_by_d, d); }
Count SnProfile::all(int d) const { return slot(all_by_d, d); }
Count SnProfile::ascent_start(int d) const { return slot(ascent_start_by_d, d); }
Count SnProfile::descent_start(int d) const { return slot(descent_start_by_d, d); }
Count SnProfile::oop(int m) const { return slot(oop_by_m, m); }
Count SnProfile::ncycle(int m) const { return slot(ncycle_by_m, m); }

Count SnProfile::by_t(int d, int t) const {
  if (d < 0 || d >= n || t > 0 || t <= -n) return 0;
  return by_d_t[static_cast<std::size_t>(d) * static_cast<std::size_t>(n) +
                static_cast<std::size_t>(-t)];
}

Count SnProfile::ballot_last(int d, int k) const {
  if (d < 0 || d >= n || k < 1 || k > n) return 0;
  return ballot_last_by_d_k[static_cast<std::size_t>(d) * static_cast<std::size_t>(n) +
                            static_cast<std::size_t>(k - 1)];
}

Count SnProfile::ud(const BinaryIndex& r) const {
  if (r.size() > n - 1)
    throw std::invalid_argument("ud: index length " + std::to_string(r.size()) +
                                " exceeds n-1 = " + std::to_string(n - 1));
  std::size_t mask = 0;
  for (int i = 1; i <= r.size(); ++i)
    if (r.bit(i) == 1) mask |= std::size_t{1} << (i - 1);
  return index_dist[mask];
}

Count SnProfile::f(const BinaryIndex& r) const {
  if (!r.ends_in_zero())
    throw std::invalid_argument("f: index '" + r.str() + "' must end in 0");
  if (r.size() > n - 1)
    throw std::invalid_argument("f: index length " + std::to_string(r.size()) +
                                " exceeds n-1 = " + std::to_string(n - 1));
  std::size_t prefix = 0;
  for (int i = 1; i <= r.size(); ++i)
    if (r.bit(i) == 1) prefix |= std::size_t{1} << (i - 1);
  Count total = 0;
  for (int pos = r.size(); pos < n - 1; ++pos)
    total += index_dist[prefix | (std::size_t{1} << pos)];
  return total;
}

Count SnProfile::ballot_total() const {
  Count total = 0;
  for (const Count& c : ballot_by_d) total += c;
  return total;
}

Count SnProfile::oop_total() const {
  Count total = 0;
  for (const Count& c : oop_by_m) total += c;
  return total;
}

SnProfile profile_sn_serial(int n, const EnumOptions& opts) {
  check_enum_size(n, opts);
  RawProfile raw(n);
  Scanner scanner(n);
  for_each_permutation(n, [&](const Word& w) { scanner.absorb(w, raw); }, opts);
  return finalize(raw);
}

SnProfile profile_sn(int n, const EnumOptions& opts) {
  check_enum_size(n, opts);
  if (opts.jobs == 1 || n < 7) return profile_sn_serial(n, opts);

  std::vector<RawProfile> parts(static_cast<std::size_t>(n));
#ifdef _OPENMP
  const int threads = opts.jobs > 0 ? opts.jobs : omp_get_max_threads();
#pragma omp parallel for schedule(static, 1) num_threads(threads)
  for (int first = 1; first <= n; ++first) {
    RawProfile local(n);
    Scanner scanner(n);
    for_each_with_first_letter(n, first, [&](const Word& w) { scanner.absorb(w, local); });
    parts[static_cast<std::size_t>(first - 1)] = std::move(local);
  }
#else
  for (int first = 1; first <= n; ++first) {
    RawProfile local(n);
    Scanner scanner(n);
    for_each_with_first_letter(n, first, [&](const Word& w) { scanner.absorb(w, local); });
    parts[static_cast<std::size_t>(first - 1)] = std::move(local);
  }
#endif
  RawProfile merged(n);
  for (const RawProfile& part : parts) merged.add(part);
  return finalize(merged);
}

Count count_ballot(int n, int d, const EnumOptions& opts) { return profile_sn(n, opts).ballot(d); }
Count count_oop(int n, int d, const EnumOptions& opts) { return profile_sn(n, opts).oop(d); }

Count count_ascent_start(int n, int d, const EnumOptions& opts) {
  if (n < 2) throw std::invalid_argument("count_ascent_start: requires n >= 2");
  return profile_sn(n, opts).ascent_start(d);
}

Count count_descent_start(int n, int d, const EnumOptions& opts) {
  if (n < 2) throw std::invalid_argument("count_descent_start: requires n >= 2");
  return profile_sn(n, opts).descent_start(d);
}

Count count_cycles_m(int n, int d, const EnumOptions& opts) {
  return profile_sn(n, opts).ncycle(d);
}

Count count_by_t(int n, int d, int t, const EnumOptions& opts) {
  return profile_sn(n, opts).by_t(d, t);
}

Count count_ballot_last(int n, int d, int k, const EnumOptions& opts) {
  if (k < 1 || k > n)
    throw std::invalid_argument("count_ballot_last: k must lie in 1..n");
  return profile_sn(n, opts).ballot_last(d, k);
}

Count count_ud(int n, const BinaryIndex& r, const EnumOptions& opts) {
  if (r.size() > n - 1)
    throw std::invalid_argument("count_ud: index length " + std::to_string(r.size()) +
                                " exceeds n-1 = " + std::to_string(n - 1));
  return profile_sn(n, opts).ud(r);
}

Count count_f(const BinaryIndex& r, int n, const EnumOptions& opts) {
  if (!r.ends_in_zero())
    throw std::invalid_argument("count_f: index '" + r.str() + "' must end in 0");
  if (r.size() > n - 1)
    throw std::invalid_argument("count_f: index length " + std::to_string(r.size()) +
                                " exceeds n-1 = " + std::to_string(n - 1));
  return profile_sn(n, opts).f(r);
}

CountTable ballot_count_table(int max_n, const EnumOptions& opts) {
  CountTable table;
  table.params = {"n", "d"};
  for (int n = 1; n <= max_n; ++n) {
    const SnProfile profile = profile_sn(n, opts);
    for (int d = 0; d <= (n - 1) / 2; ++d) table.set({n, d}, profile.ballot(d));
  }
  return table;
}

CountTable oop_count_table(int max_n, const EnumOptions& opts) {
  CountTable table;
  table.params = {"n", "d"};
  for (int n = 1; n <= max_n; ++n) {
    const SnProfile profile = profile_sn(n, opts);
    for (int d = 0; d <= (n - 1) / 2; ++d) table.set({n, d}, profile.oop(d));
  }
  return table;
}

CountTable ballot_last_count_table(int n, const EnumOptions& opts) {
  CountTable table;
  table.params = {"n", "k", "d"};
  const SnProfile profile = profile_sn(n, opts);
  for (int k = 1; k <= n; ++k)
    for (int d = 0; d <= (n - 1) / 2; ++d) table.set({n, k, d}, profile.ballot_last(d, k));
  return table;
}

} // namespace ballot::oracle
