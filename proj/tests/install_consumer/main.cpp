#include <iostream>

#include "chowring/pipeline.hpp"

int main() {
  const auto p = chowring::m01();
  for (const auto& g : p.simplified) std::cout << g.to_string() << '\n';
  return p.verified() ? 0 : 1;
}
