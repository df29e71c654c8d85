// Builds ⟨4,5⟩, prints K°, and the two chains from β to 2β−α.

#include <iostream>

#include "goodsg/goodsg.hpp"

int main() {
  const auto S = goodsg::GoodSemigroup::from_generators({4, 5}, "<4,5>");
  const auto K = goodsg::canonical_ideal(S);
  std::cout << "beta = " << S.conductor() << "\nK° = {";
  bool first = true;
  for (const auto& a : goodsg::k_small(K, goodsg::Order::lt_neq)) {
    std::cout << (first ? "" : ", ") << a;
    first = false;
  }
  std::cout << "}\n";

  const auto report = goodsg::noether_check(S);
  std::cout << goodsg::io::to_json(report).dump(2) << "\n";
  return report.full_chain ? 0 : 1;
}
