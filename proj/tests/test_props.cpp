#include <doctest.h>

#include "props_impl.hpp"

// 1000 randomized rounds per suite, fixed seeds

TEST_CASE("star-operator composition identity") {
  CHECK(props::suite_star(1000, 0xA11CE001u) == 0);
}

TEST_CASE("Puiseux pairs are conjugacy invariant") {
  CHECK(props::suite_conjugacy(1000, 0xA11CE002u) == 0);
}

TEST_CASE("value and leading-coefficient multiplicativity") {
  CHECK(props::suite_multiplicative(1000, 0xA11CE003u) == 0);
}

TEST_CASE("leading coefficient has the xi^s h(xi^p_last) shape") {
  CHECK(props::suite_lc_shape(1000, 0xA11CE004u) == 0);
}

TEST_CASE("normalized value is monotone in the contact order") {
  CHECK(props::suite_comparison(1000, 0xA11CE005u) == 0);
}

TEST_CASE("minimal polynomials vanish on all conjugates") {
  CHECK(props::suite_resubstitution(1000, 0xA11CE006u) == 0);
}
