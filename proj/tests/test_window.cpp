#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "submod/window.hpp"

using namespace submod;

TEST_CASE("active window bounds") {
    CHECK(active_window(5, 10).start == 1);
    CHECK(active_window(5, 10).end == 5);
    CHECK(active_window(10, 10).start == 1);
    CHECK(active_window(10, 10).end == 10);
    CHECK(active_window(11, 10).start == 2);
    CHECK(active_window(11, 10).end == 11);
}

TEST_CASE("window length is min(t, W)") {
    for (std::uint64_t w : {1ull, 3ull, 17ull}) {
        for (std::uint64_t t = 1; t <= 40; ++t) {
            const ActiveWindow a = active_window(t, w);
            CHECK(a.length() == std::min(t, w));
            CHECK(a.end == t);
        }
    }
}

TEST_CASE("window spec validation") {
    WindowSpec ok{10, 3, 0.1, 0};
    CHECK_NOTHROW(ok.validate());
    CHECK(ok.effective_sub_window() == 10);

    WindowSpec with_sub{10, 3, 0.1, 4};
    CHECK_NOTHROW(with_sub.validate());
    CHECK(with_sub.effective_sub_window() == 4);

    CHECK_THROWS(WindowSpec{0, 3, 0.1, 0}.validate());
    CHECK_THROWS(WindowSpec{10, 0, 0.1, 0}.validate());
    CHECK_THROWS(WindowSpec{10, 3, 0.0, 0}.validate());
    CHECK_THROWS(WindowSpec{10, 3, 1.0, 0}.validate());
    CHECK_THROWS(WindowSpec{10, 3, 0.1, 11}.validate());
}
