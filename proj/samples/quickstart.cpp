// Build S^{a,e} four ways, decide total non-negativity, and print the
// certificate weights.

#include <iostream>

#include "gstirling/gstirling.hpp"

int main() {
  using namespace gstirling;

  const SequencePair sp(parse_rational_list("0,1,2,3"), parse_rational_list("0,1,1,2"));
  const TriMatrix s = stirling_recurrence(sp);
  std::cout << render_table(s);

  const bool agree = s == stirling_explicit(sp) && s == stirling_symmetric(sp) && s == path_matrix(build_initial(sp));
  std::cout << "routes agree: " << (agree ? "yes" : "no") << '\n';

  const TnnVerdict verdict = decide_tnn(sp);
  std::cout << (verdict.tnn ? "TNN" : "NOT_TNN") << ", pivots:";
  for (const Position& p : verdict.trace.pivots) std::cout << " [" << p.m << ',' << p.k << ']';
  std::cout << '\n' << render_weight_array(verdict.trace.final, true);

  const TnnVerdict bad = decide_tnn(SequencePair(parse_rational_list("0,1"), parse_rational_list("0,2")));
  std::cout << "e = (0,2): negative entry S(" << bad.witness->row << ',' << bad.witness->col
            << ") = " << bad.witness->value << '\n';
  return agree && verdict.tnn ? 0 : 1;
}
