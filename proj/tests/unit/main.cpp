#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include "zkit/groebner.hpp"

int main(int argc, char** argv) {
  // Every basis computed during the run is re-checked against Buchberger's criterion.
  zkit::set_groebner_self_check(true);
  doctest::Context ctx(argc, argv);
  return ctx.run();
}
