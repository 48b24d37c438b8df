#include "distgame/cli.hpp"

int main(int argc, char** argv) {
  return distgame::run(argc, argv);
}
