#pragma once

// The constructive Pappus configuration and the nine-line incidence
// counterexample.

#include "tropic/constructions.hpp"

#include <array>
#include <string>
#include <vector>

namespace tropic {

struct PappusTrace {
  std::array<ProjectivePoint, 5> input;
  std::array<ProjectivePoint, 3> derived;  // points 6, 7, 8
  // a, b, c, a', b', c', a'', b'', c''
  std::array<LineCoeffs, 9> lines;
  TropMatrix conclusion_matrix;
  bool singular = false;    // tropical singularity of the rows a'', b'', c''
  bool concurrent = false;  // geometric concurrency of a'', b'', c''
  std::optional<ProjectivePoint> witness;
};

inline const std::array<std::string, 9>& pappus_line_names() {
  static const std::array<std::string, 9> names{"a", "b", "c", "a'", "b'", "c'", "a''", "b''", "c''"};
  return names;
}

/// a = 1⊗4, b = 2⊗4, c = 3⊗4, a' = 1⊗5, b' = 2⊗5, c' = 3⊗5,
/// 6 = b⊗c', 7 = a'⊗c, 8 = a⊗b', a'' = 1⊗6, b'' = 2⊗7, c'' = 3⊗8.
inline PappusTrace pappus_construct(const std::array<ProjectivePoint, 5>& p) {
  PappusTrace t{p, {p[0], p[0], p[0]}, {}, {}, false, false, std::nullopt};
  auto& L = t.lines;
  L[0] = stable_join(p[0], p[3]);
  L[1] = stable_join(p[1], p[3]);
  L[2] = stable_join(p[2], p[3]);
  L[3] = stable_join(p[0], p[4]);
  L[4] = stable_join(p[1], p[4]);
  L[5] = stable_join(p[2], p[4]);
  t.derived[0] = stable_meet(L[1], L[5]);
  t.derived[1] = stable_meet(L[3], L[2]);
  t.derived[2] = stable_meet(L[0], L[4]);
  L[6] = stable_join(p[0], t.derived[0]);
  L[7] = stable_join(p[1], t.derived[1]);
  L[8] = stable_join(p[2], t.derived[2]);
  t.conclusion_matrix = TropMatrix::from_rows({{L[6].begin(), L[6].end()},
                                               {L[7].begin(), L[7].end()},
                                               {L[8].begin(), L[8].end()}});
  t.singular = is_tropically_singular(t.conclusion_matrix);
  const auto c = lines_concurrent(L[6], L[7], L[8]);
  t.concurrent = c.concurrent;
  t.witness = c.witness;
  return t;
}

/// Columns a, b, c, a', b', c', a'', b'', c'' of the counterexample, third
/// row zero.
inline std::array<LineCoeffs, 9> pappus_counterexample_lines() {
  static const int top[9] = {-4, -2, -9, -5, -4, -7, 2, 6, 0};
  static const int mid[9] = {6, 5, 0, 6, 2, 0, 6, 4, 0};
  std::array<LineCoeffs, 9> lines;
  for (int c = 0; c < 9; ++c) lines[c] = {top[c], mid[c], 0};
  return lines;
}

/// The eight hypothesis triples followed by the conclusion triple, as
/// indices into the nine lines.
inline const std::array<std::array<int, 3>, 9>& pappus_triples() {
  static const std::array<std::array<int, 3>, 9> triples{{{0, 3, 6},
                                                          {1, 4, 7},
                                                          {2, 5, 8},
                                                          {0, 1, 2},
                                                          {3, 4, 5},
                                                          {6, 1, 5},
                                                          {3, 7, 2},
                                                          {0, 4, 8},
                                                          {6, 7, 8}}};
  return triples;
}

}  // namespace tropic
