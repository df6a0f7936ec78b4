#include "matcount/cli.hpp"

int main(int argc, char** argv) {
  return matcount::cli::run(std::vector<std::string>(argv + 1, argv + argc));
}
