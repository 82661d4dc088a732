#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "aj/rng.hpp"

using namespace aj;

TEST_CASE("identical seeds give identical streams") {
    Rng a(42), b(42);
    for (int i = 0; i < 1000; ++i) REQUIRE(a.next_u64() == b.next_u64());
}

TEST_CASE("substreams are distinct and stable") {
    auto chain = substream_seed(1, "chain");
    auto noise = substream_seed(1, "noise");
    CHECK(chain != noise);
    CHECK(chain == substream_seed(1, "chain"));
    CHECK(chain != substream_seed(2, "chain"));
}

TEST_CASE("slot seeds are addressable out of order") {
    auto stream = substream_seed(7, "noise");
    double fifth_first = slot_rng(stream, 5).uniform();
    slot_rng(stream, 0).uniform();
    slot_rng(stream, 9).uniform();
    CHECK(slot_rng(stream, 5).uniform() == fifth_first);
    CHECK(slot_seed(stream, 4) != slot_seed(stream, 5));
}

TEST_CASE("uniform moments") {
    Rng rng(3);
    const int T = 200000;
    double sum = 0.0, sq = 0.0;
    for (int i = 0; i < T; ++i) {
        double u = rng.uniform();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
        sum += u;
        sq += u * u;
    }
    CHECK(sum / T == doctest::Approx(0.5).epsilon(0.005));
    CHECK(sq / T == doctest::Approx(1.0 / 3).epsilon(0.01));
}

TEST_CASE("gaussian moments") {
    Rng rng(11);
    const int T = 200000;
    double sum = 0.0, sq = 0.0;
    for (int i = 0; i < T; ++i) {
        double z = rng.gaussian();
        sum += z;
        sq += z * z;
    }
    CHECK(std::abs(sum / T) < 0.01);
    CHECK(sq / T == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("complex gaussian has the requested power") {
    Rng rng(13);
    const int T = 200000;
    double power = 0.0;
    for (int i = 0; i < T; ++i) power += std::norm(rng.complex_gaussian(2.5));
    CHECK(power / T == doctest::Approx(2.5).epsilon(0.02));
}

TEST_CASE("uniform_int stays in bounds and covers them") {
    Rng rng(5);
    std::vector<int> seen(9, 0);
    for (int i = 0; i < 90000; ++i) ++seen[rng.uniform_int(9)];
    for (int k = 0; k < 9; ++k) CHECK(seen[k] == doctest::Approx(10000).epsilon(0.05));
}

TEST_CASE("categorical follows the pdf") {
    Rng rng(19);
    std::vector<double> pdf{0.5, 0.3, 0.2};
    std::vector<int> count(3, 0);
    const int T = 300000;
    for (int i = 0; i < T; ++i) ++count[rng.categorical(pdf)];
    for (int k = 0; k < 3; ++k) {
        double sigma = std::sqrt(pdf[k] * (1 - pdf[k]) / T);
        CHECK(std::abs(count[k] / double(T) - pdf[k]) < 4 * sigma);
    }
}
