#include <string>
#include <vector>

#include "contraction/io.hpp"

int main(int argc, char** argv) {
  return contraction::run(std::vector<std::string>(argv + 1, argv + argc));
}
