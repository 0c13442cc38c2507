#pragma once
// Exhaustive search over bipermutive rule pairs of one diameter: enumerate
// the 2^(2^(d-2)) rules, gate each unordered pair on "at least one rule
// nonlinear" and orthogonality, and fully analyze the survivors.
//
// An orthogonal pair {f, g} defines two distinct S-boxes, F||G and G||F, so
// it contributes two records; pairs_enumerated still counts unordered pairs.

#include <algorithm>
#include <cstdint>
#include <exception>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "oca/boolfun.hpp"
#include "oca/ca.hpp"
#include "oca/codes.hpp"
#include "oca/lcs.hpp"
#include "oca/sbox.hpp"

namespace oca {

struct PairRecord {
  int diameter = 0;
  std::uint64_t rule_f = 0;  // rule of the left output half
  std::uint64_t rule_g = 0;  // rule of the right output half
  int nl_f = 0;
  int nl_g = 0;
  int sbox_nl = 0;
  int sbox_degree = 0;
  int lcs_dim = 0;
  CodeClassification classification;
};

struct SearchReport {
  int diameter = 0;
  std::uint64_t pairs_enumerated = 0;  // unordered pairs visited
  std::vector<PairRecord> records;     // sorted by (rule_f, rule_g)
};

// All bipermutive rules x1 xor g(x2..x_{d-1}) xor xd of one diameter, in
// increasing rule-number order; there are exactly 2^(2^(d-2)) of them.
inline std::vector<LocalRule> enumerate_bipermutive(int diameter) {
  if (diameter < 3 || diameter > 6)
    throw std::invalid_argument("search diameter must be between 3 and 6");
  const int mid = diameter - 2;
  const std::uint64_t count = std::uint64_t{1} << (std::size_t{1} << mid);
  const std::size_t mid_mask = (std::size_t{1} << mid) - 1;
  const std::size_t sz = std::size_t{1} << diameter;
  std::vector<LocalRule> rules;
  rules.reserve(count);
  for (std::uint64_t gnum = 0; gnum < count; ++gnum) {
    std::vector<std::uint8_t> t(sz);
    for (std::size_t k = 0; k < sz; ++k) {
      const std::size_t g_in = (k >> 1) & mid_mask;
      t[k] = static_cast<std::uint8_t>(((k >> (diameter - 1)) & 1u) ^ ((gnum >> g_in) & 1u) ^
                                       (k & 1u));
    }
    rules.emplace_back(diameter, std::move(t));
  }
  std::sort(rules.begin(), rules.end(),
            [](const LocalRule& a, const LocalRule& b) { return a.rule_number() < b.rule_number(); });
  return rules;
}

namespace detail {

// Full analysis of the S-box F||G taken from the two rules' Latin squares
// (the flattened square of a rule is exactly its CA table over 2b cells).
inline PairRecord make_record(int diameter, std::uint64_t rule_f, std::uint64_t rule_g, int nl_f,
                              int nl_g, const LatinSquare& sf, const LatinSquare& sg) {
  const int b = diameter - 1;
  const int n = 2 * b;
  std::vector<std::uint16_t> table(sf.cells.size());
  for (std::size_t x = 0; x < table.size(); ++x)
    table[x] = static_cast<std::uint16_t>((sf.cells[x] << b) | sg.cells[x]);
  const SBox h(n, std::move(table));

  const auto comp_nl = component_nonlinearities(h);
  std::vector<std::uint32_t> affine;
  int min_nl = comp_nl[0];
  for (std::uint32_t v = 1; v <= comp_nl.size(); ++v) {
    min_nl = std::min(min_nl, comp_nl[v - 1]);
    if (comp_nl[v - 1] == 0) affine.push_back(v);
  }
  const LinearCode code = components_span(n, affine);

  PairRecord rec;
  rec.diameter = diameter;
  rec.rule_f = rule_f;
  rec.rule_g = rule_g;
  rec.nl_f = nl_f;
  rec.nl_g = nl_g;
  rec.sbox_nl = min_nl;
  rec.sbox_degree = sbox_degree(h);
  rec.lcs_dim = code.dimension();
  rec.classification = classify_code(code);
  return rec;
}

}  // namespace detail

// Record for the ordered pair (f, g), i.e. the S-box F||G. Empty when both
// rules are linear (nonlinearity 0) or when the pair is not orthogonal.
inline std::optional<PairRecord> analyze_pair(const LocalRule& f, const LocalRule& g) {
  if (f == g) throw std::invalid_argument("the two rules must be distinct");
  detail::require_ca_pair(f, g);
  const int nl_f = nonlinearity(f);
  const int nl_g = nonlinearity(g);
  if (nl_f == 0 && nl_g == 0) return std::nullopt;
  const LatinSquare sf = latin_square(f);
  const LatinSquare sg = latin_square(g);
  if (!are_orthogonal(sf, sg)) return std::nullopt;
  return detail::make_record(f.n_vars(), f.rule_number(), g.rule_number(), nl_f, nl_g, sf, sg);
}

inline SearchReport run_search(int diameter, int workers = 1) {
  if (workers < 1) throw std::invalid_argument("worker count must be positive");
  const std::vector<LocalRule> rules = enumerate_bipermutive(diameter);
  const std::size_t m = rules.size();

  // Memoize per-rule data once; the pair loop only reads it.
  std::vector<std::uint64_t> numbers(m);
  std::vector<int> nl(m);
  std::vector<LatinSquare> squares(m);
  for (std::size_t i = 0; i < m; ++i) {
    numbers[i] = rules[i].rule_number();
    nl[i] = nonlinearity(rules[i]);
    squares[i] = latin_square(rules[i]);
  }

  const std::uint64_t total = static_cast<std::uint64_t>(m) * (m - 1) / 2;
  const int nworkers = static_cast<int>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(total, 1)));

  // Static chunking of the unordered-pair triangle; each worker owns a
  // contiguous range of flattened pair indices and its own output buffer.
  auto pair_at = [m](std::uint64_t p) {
    std::size_t i = 0;
    std::uint64_t row = m - 1;
    while (p >= row) {
      p -= row;
      ++i;
      --row;
    }
    return std::pair<std::size_t, std::size_t>{i, i + 1 + static_cast<std::size_t>(p)};
  };

  std::vector<std::vector<PairRecord>> results(nworkers);
  std::vector<std::exception_ptr> errors(nworkers);
  auto work = [&](int w) {
    try {
      const std::uint64_t begin = total * w / nworkers;
      const std::uint64_t end = total * (w + 1) / nworkers;
      if (begin >= end) return;
      auto [i, j] = pair_at(begin);
      for (std::uint64_t p = begin; p < end; ++p) {
        if (!(nl[i] == 0 && nl[j] == 0) && are_orthogonal(squares[i], squares[j])) {
          results[w].push_back(detail::make_record(diameter, numbers[i], numbers[j], nl[i],
                                                   nl[j], squares[i], squares[j]));
          results[w].push_back(detail::make_record(diameter, numbers[j], numbers[i], nl[j],
                                                   nl[i], squares[j], squares[i]));
        }
        if (++j == m) {
          ++i;
          j = i + 1;
        }
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };

  if (nworkers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(nworkers);
    for (int w = 0; w < nworkers; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  SearchReport report;
  report.diameter = diameter;
  report.pairs_enumerated = total;
  for (auto& part : results)
    report.records.insert(report.records.end(), part.begin(), part.end());
  std::sort(report.records.begin(), report.records.end(),
            [](const PairRecord& a, const PairRecord& b) {
              return std::pair{a.rule_f, a.rule_g} < std::pair{b.rule_f, b.rule_g};
            });
  return report;
}

}  // namespace oca
