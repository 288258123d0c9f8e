// A short tour of the pair of pants: self-intersection numbers, cobrackets
// and brackets of a few classes.

#include <iostream>

#include "gtlie/gtlie.hpp"

int main() {
  using namespace gtlie;
  const RibbonGraph pants = planar_rose(3);

  for (const char* text : {"a", "ab", "aB", "aab", "aaB", "abAB", "aBaB"}) {
    const CyclicWord w = parse_class(text, pants.rank());
    std::cout << text << "\tsi=" << self_intersection(pants, w)
              << "\tdelta=" << to_string(cobracket(pants, w)) << '\n';
  }

  const RibbonGraph torus = torus_rose();
  const CyclicWord a = parse_class("a", 2);
  const CyclicWord b = parse_class("b", 2);
  std::cout << "torus [a,b] = " << to_string(bracket(torus, a, b)) << '\n';
  std::cout << "pants [a,aB] = " << to_string(bracket(pants, a, parse_class("aB", 2))) << '\n';
}
