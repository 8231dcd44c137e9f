#include <catch2/catch_amalgamated.hpp>
TEST_CASE("cli placeholder"){CHECK(true);}
