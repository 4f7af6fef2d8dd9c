#include <cmath>

#include <doctest.h>

#include "helpers.hpp"
#include "secres/criterion.hpp"

using namespace secres;
using testutil::check_rel;

TEST_CASE("indicator values of the shipped systems") {
  PiReport hot = pi_indicator(testutil::hd11964());
  check_rel(hot.pi[0], 0.96576596055965957, 1e-13);
  check_rel(hot.pi[1], 0.040052808443425357, 1e-13);
  CHECK(hot.threshold == 0.1);
  CHECK(hot.relevant[0]);
  CHECK_FALSE(hot.relevant[1]);

  PiReport cold = pi_indicator(testutil::hd169830());
  check_rel(cold.pi[0], 0.0021792296655898904, 1e-13);
  check_rel(cold.pi[1], 0.00015488152183573135, 1e-13);
  CHECK_FALSE(cold.relevant[0]);
  CHECK_FALSE(cold.relevant[1]);
}

TEST_CASE("threshold moves the flags, not the values") {
  PiReport strict = pi_indicator(testutil::hd11964(), 0.5);
  CHECK(strict.threshold == 0.5);
  CHECK(strict.relevant[0]);
  CHECK_FALSE(strict.relevant[1]);

  PiReport loose = pi_indicator(testutil::hd11964(), 0.02);
  CHECK(loose.relevant[0]);
  CHECK(loose.relevant[1]);
  CHECK(loose.pi[0] == strict.pi[0]);

  // the flag is inclusive at the boundary
  PiReport edge = pi_indicator(testutil::hd11964(), strict.pi[0]);
  CHECK(edge.relevant[0]);

  CHECK_THROWS_AS((void)pi_indicator(testutil::hd11964(), 0.0),
                  std::domain_error);
  CHECK_THROWS_AS((void)pi_indicator(testutil::hd11964(), -0.1),
                  std::domain_error);
}

TEST_CASE("indicator scales as 1/c^2") {
  SystemConfig cfg = testutil::hd169830();
  PiReport base = pi_indicator(cfg);
  cfg.constants.c = 2.0 * cfg.constants.c;
  PiReport slow = pi_indicator(cfg);
  CHECK(4.0 * slow.pi[0] == base.pi[0]);
  CHECK(4.0 * slow.pi[1] == base.pi[1]);
}

TEST_CASE("indicator requires ordered planets and stays positive") {
  SystemConfig cfg = testutil::hd169830();
  std::swap(cfg.planets[0], cfg.planets[1]);
  CHECK_THROWS_AS((void)pi_indicator(cfg), std::domain_error);

  cfg = testutil::hd169830();
  cfg.planets[1].elements.a = cfg.planets[0].elements.a;
  CHECK_THROWS_AS((void)pi_indicator(cfg), std::domain_error);

  PiReport rep = pi_indicator(testutil::low_e_synthetic());
  CHECK(rep.pi[0] > 0.0);
  CHECK(rep.pi[1] > 0.0);
}
