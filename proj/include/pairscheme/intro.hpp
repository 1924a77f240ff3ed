#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "pairscheme/scheme.hpp"
#include "pairscheme/translation.hpp"

namespace pairscheme {

/// The four-class quadratic-character scheme on F_q x F_{q+2}, q odd:
/// pairs are related by the sign of the product of the two quadratic
/// characters of the coordinate differences, or by sharing a coordinate.
inline TranslationData build_intro_relations(long q) {
  if (q % 2 == 0) throw std::invalid_argument("quadratic-character scheme requires odd q");
  auto pq = is_prime_power(q);
  auto pr = is_prime_power(q + 2);
  if (!pq) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  if (!pr) throw std::invalid_argument(std::to_string(q + 2) + " is not a prime power");

  TranslationData t;
  t.factors = {make_field(pq->first, pq->second), make_field(pr->first, pr->second)};
  t.labels = {"R0", "R1", "R2", "R3", "R4"};
  t.relations.resize(5);
  const FieldSpec& fq = *t.factors[0];
  const FieldSpec& fr = *t.factors[1];
  t.relations[0] = {0};
  auto idx = [&](long x, long y) { return x * fr.q() + y; };
  for (long x = 0; x < fq.q(); ++x)
    for (long y = 0; y < fr.q(); ++y) {
      if (x == 0 && y == 0) continue;
      if (x != 0 && y == 0) {
        t.relations[3].push_back(idx(x, y));
      } else if (x == 0) {
        t.relations[4].push_back(idx(x, y));
      } else {
        int sign = fq.quadratic_character(x) * fr.quadratic_character(y);
        t.relations[sign == 1 ? 1 : 2].push_back(idx(x, y));
      }
    }
  return t;
}

inline SchemeInstance intro_scheme(long q) {
  TranslationData t = build_intro_relations(q);
  SchemeInstance s;
  s.v = t.vertex_count();
  s.labels = t.labels;
  for (std::size_t i = 0; i < t.relations.size(); ++i) s.classes.push_back(t.adjacency(i));
  s.translation = std::move(t);
  return s;
}

struct DifferenceSetReport {
  long v = 0;
  long k = 0;
  long lambda = -1;
  bool verified = false;
  std::map<long, long> histogram;  // difference count -> how many group elements have it
};

/// Exhaustive ordered-difference count of a subset of the group; verified
/// iff every nonzero element occurs the same number of times.
inline DifferenceSetReport verify_difference_set(const std::vector<long>& subset, const TranslationData& t) {
  if (subset.empty()) throw std::invalid_argument("verify_difference_set: empty subset");
  DifferenceSetReport rep;
  rep.v = t.vertex_count();
  rep.k = static_cast<long>(subset.size());
  std::vector<long> counts(static_cast<std::size_t>(rep.v), 0);
  for (long x : subset)
    for (long y : subset) {
      if (x == y) continue;
      ++counts[static_cast<std::size_t>(t.sub(x, y))];
    }
  bool flat = true;
  long lambda = counts.size() > 1 ? counts[1] : 0;
  for (long d = 1; d < rep.v; ++d) {
    ++rep.histogram[counts[static_cast<std::size_t>(d)]];
    if (counts[static_cast<std::size_t>(d)] != lambda) flat = false;
  }
  if (counts[0] != 0) flat = false;
  rep.verified = flat;
  if (flat) rep.lambda = lambda;
  return rep;
}

/// Union of N_0, N_1 and N_3; the scheme's difference set.
inline std::vector<long> intro_difference_set(const TranslationData& t) {
  std::vector<long> d;
  for (std::size_t i : {std::size_t{0}, std::size_t{1}, std::size_t{3}})
    for (long x : t.relations[i]) d.push_back(x);
  return d;
}

}  // namespace pairscheme
