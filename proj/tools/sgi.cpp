#include "sgi/pipeline.hpp"

int main(int argc, char** argv) {
  sgi::configure_logging();
  return sgi::run_cli(argc, argv);
}
