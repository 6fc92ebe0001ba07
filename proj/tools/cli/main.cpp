#include "cli/commands.hpp"

int main(int argc, char** argv) {
  return cfknot::cli::run(argc, argv);
}
