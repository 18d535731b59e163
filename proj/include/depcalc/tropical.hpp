#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "depcalc/poset.hpp"

namespace depcalc {

/// Exact nonnegative runtime.
using Runtime = boost::multiprecision::cpp_rational;

/// Parses "3", "1.25", or "7/4" exactly. Throws ParseError on malformed or
/// negative input.
Runtime parse_runtime(std::string_view text);

/// Comma-separated list of runtimes.
std::vector<Runtime> parse_runtimes(std::string_view text);

/// Shortest exact text: an integer, a terminating decimal, or p/q.
std::string format_runtime(const Runtime& r);

/// Earliest-start schedule under unlimited parallelism.
template <typename Scalar>
struct Schedule {
  std::vector<Scalar> start;
  std::vector<Scalar> finish;
  Scalar makespan{0};
  std::vector<Element> critical_chain;
};

namespace detail {

inline void check_arity(const FinitePoset& p, std::size_t values) {
  if (values != p.size()) {
    throw ArityError("expected " + std::to_string(p.size()) + " runtimes, got " +
                     std::to_string(values));
  }
}

}  // namespace detail

/// Maximum over chains of P of the summed runtimes (0 for the empty poset),
/// by longest-path dynamic programming over a linear extension.
template <typename Scalar>
Scalar boxtimes(const FinitePoset& p, std::span<const Scalar> a) {
  detail::check_arity(p, a.size());
  const Permutation order = least_linear_extension(p);
  std::vector<Scalar> best(p.size(), Scalar(0));
  Scalar result(0);
  for (Element j : order) {
    Scalar below(0);
    for (Element i = 0; i < p.size(); ++i) {
      if (p.less(i, j)) below = std::max(below, best[i]);
    }
    best[j] = below + a[j];
    result = std::max(result, best[j]);
  }
  return result;
}

template <typename Scalar>
Scalar boxtimes(const FinitePoset& p, const std::vector<Scalar>& a) {
  return boxtimes(p, std::span<const Scalar>(a));
}

/// Start every element as soon as all its predecessors finish. The critical
/// chain is the lexicographically least chain whose runtime is the makespan.
template <typename Scalar>
Schedule<Scalar> schedule(const FinitePoset& p, std::span<const Scalar> a) {
  detail::check_arity(p, a.size());
  const std::size_t n = p.size();
  Schedule<Scalar> s;
  s.start.assign(n, Scalar(0));
  s.finish.assign(n, Scalar(0));
  const Permutation order = least_linear_extension(p);
  for (Element j : order) {
    for (Element i = 0; i < n; ++i) {
      if (p.less(i, j)) s.start[j] = std::max(s.start[j], s.finish[i]);
    }
    s.finish[j] = s.start[j] + a[j];
    s.makespan = std::max(s.makespan, s.finish[j]);
  }

  // tail[i]: heaviest chain starting at i.
  std::vector<Scalar> tail(n, Scalar(0));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Scalar above(0);
    for (Element k = 0; k < n; ++k) {
      if (p.less(*it, k)) above = std::max(above, tail[k]);
    }
    tail[*it] = a[*it] + above;
  }
  if (n == 0) return s;
  Element current = n;
  for (Element i = 0; i < n; ++i) {
    if (tail[i] == s.makespan) {
      current = i;
      break;
    }
  }
  Scalar remaining = s.makespan;
  for (;;) {
    s.critical_chain.push_back(current);
    remaining -= a[current];
    if (remaining == Scalar(0)) break;
    Element next = n;
    for (Element k = 0; k < n; ++k) {
      if (p.less(current, k) && tail[k] == remaining) {
        next = k;
        break;
      }
    }
    if (next == n) break;
    current = next;
  }
  return s;
}

template <typename Scalar>
Schedule<Scalar> schedule(const FinitePoset& p, const std::vector<Scalar>& a) {
  return schedule(p, std::span<const Scalar>(a));
}

/// (a + b) max (c + d) <= (a max c) + (b max d).
template <typename Scalar>
bool check_interchange(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) {
  return std::max<Scalar>(a + b, c + d) <= std::max<Scalar>(a, c) + std::max<Scalar>(b, d);
}

/// Fixed-width Gantt chart: one row per element, one column per
/// `resolution` time units. A cell is filled when the element runs during
/// any part of that column.
std::string render_gantt(const Schedule<Runtime>& s, const Runtime& resolution,
                         std::span<const std::string> labels = {});

}  // namespace depcalc
