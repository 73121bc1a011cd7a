#include <doctest.h>

#include "logfrob/fields.hpp"
#include "oracles.hpp"

using namespace logfrob;

TEST_CASE("field descriptors normalize and validate") {
    CHECK(FieldDescriptor::quadratic(12).d == 3);
    CHECK(FieldDescriptor::quadratic(18).d == 2);
    CHECK(FieldDescriptor::quadratic(-4).d == -1);
    CHECK(FieldDescriptor::quadratic(-9).d == -1);
    CHECK(FieldDescriptor::quadratic(2).degree() == 2);
    CHECK(FieldDescriptor::quadratic(2).label() == "Q(sqrt 2)");

    CHECK_THROWS_AS(FieldDescriptor::quadratic(0), Error);
    CHECK_THROWS_AS(FieldDescriptor::quadratic(1), Error);
    CHECK_THROWS_AS(FieldDescriptor::quadratic(4), Error);
    CHECK_THROWS_AS(FieldDescriptor::quadratic(9), Error);

    CHECK(FieldDescriptor::tower(3, 2).degree() == 9);
    CHECK(FieldDescriptor::tower(5, 3).degree() == 125);
    CHECK(FieldDescriptor::tower(3, 2).label() == "B2@3");

    CHECK_THROWS_AS(FieldDescriptor::tower(2, 1), Error);
    CHECK_THROWS_AS(FieldDescriptor::tower(9, 1), Error);
    CHECK_THROWS_AS(FieldDescriptor::tower(3, 0), Error);
    CHECK_THROWS_AS(FieldDescriptor::tower(3, 40), Error);
}

TEST_CASE("classification separates the classical and logarithmic pictures") {
    auto cls = [](const FieldDescriptor& f, long long p) { return classify_prime(f, p); };

    // The four shapes at p = 2 over quadratic fields.
    auto c17 = cls(FieldDescriptor::quadratic(17), 2);
    CHECK(c17.classical == SplitStatus::split);
    CHECK(c17.logarithmic == SplitStatus::split);

    auto c5 = cls(FieldDescriptor::quadratic(5), 2);
    CHECK(c5.classical == SplitStatus::inert);
    CHECK(c5.logarithmic == SplitStatus::ramified);

    auto c2 = cls(FieldDescriptor::quadratic(2), 2);
    CHECK(c2.classical == SplitStatus::ramified);
    CHECK(c2.logarithmic == SplitStatus::inert);

    auto c3 = cls(FieldDescriptor::quadratic(3), 2);
    CHECK(c3.classical == SplitStatus::ramified);
    CHECK(c3.logarithmic == SplitStatus::ramified);

    // Odd primes: the two pictures coincide.
    CHECK(cls(FieldDescriptor::quadratic(17), 13).classical == SplitStatus::split);
    CHECK(cls(FieldDescriptor::quadratic(17), 3).classical == SplitStatus::inert);
    auto c1717 = cls(FieldDescriptor::quadratic(17), 17);
    CHECK(c1717.classical == SplitStatus::ramified);
    CHECK(c1717.logarithmic == SplitStatus::ramified);

    // Tower layers: p = ell trades ramification for logarithmic inertia.
    auto t3 = cls(FieldDescriptor::tower(3, 1), 3);
    CHECK(t3.classical == SplitStatus::ramified);
    CHECK(t3.logarithmic == SplitStatus::inert);
    CHECK(t3.idx.e == 3);
    CHECK(t3.idx.f_log == 3);
    auto t2 = cls(FieldDescriptor::tower(3, 1), 2);
    CHECK(t2.classical == SplitStatus::inert);
    CHECK(t2.logarithmic == SplitStatus::inert);

    CHECK_THROWS_AS(cls(FieldDescriptor::quadratic(17), 4), Error);

    CHECK(split_status_name(SplitStatus::split) == std::string("split"));
    CHECK(split_status_name(SplitStatus::inert) == std::string("inert"));
    CHECK(split_status_name(SplitStatus::ramified) == std::string("ramified"));
}

TEST_CASE("statuses agree away from 2d") {
    for (long long d = -80; d <= 80; ++d) {
        if (d == 0 || d == 1 || !is_squarefree(d)) continue;
        auto field = FieldDescriptor::quadratic(d);
        long long abs_d = d < 0 ? -d : d;
        for (long long p : oracle::primes_up_to(60)) {
            if (p == 2 || abs_d % p == 0) continue;
            auto c = classify_prime(field, p);
            CHECK(c.classical == c.logarithmic);
            CHECK(c.classical != SplitStatus::ramified);
        }
    }
}

TEST_CASE("logarithmic conductors of quadratic fields") {
    CHECK(global_conductor(FieldDescriptor::quadratic(2)).trivial());
    CHECK(global_conductor(FieldDescriptor::quadratic(2)).str() == "(1)");
    CHECK(global_conductor(FieldDescriptor::quadratic(-14)).str() == "7^1");

    auto c17 = global_conductor(FieldDescriptor::quadratic(17));
    CHECK(c17.contains(17));
    CHECK(!c17.contains(2));
    CHECK(c17.exponents.size() == 1);

    auto c5 = global_conductor(FieldDescriptor::quadratic(5));
    CHECK(c5.contains(2));
    CHECK(c5.contains(5));
    CHECK(c5.str() == "2^1*5^1");

    auto cm1 = global_conductor(FieldDescriptor::quadratic(-1));
    CHECK(cm1.contains(2));
    CHECK(cm1.exponents.size() == 1);

    auto c3 = global_conductor(FieldDescriptor::quadratic(3));
    CHECK(c3.contains(2));
    CHECK(c3.contains(3));

    CHECK(local_conductor_exponent(FieldDescriptor::quadratic(17), 2) == 0);
    CHECK(local_conductor_exponent(FieldDescriptor::quadratic(17), 17) == 1);
    CHECK(local_conductor_exponent(FieldDescriptor::quadratic(5), 2) == 1);
}

TEST_CASE("tower layers are logarithmically unramified everywhere") {
    for (long ell : {3L, 5L, 7L}) {
        for (int n = 1; n <= 3; ++n) {
            auto field = FieldDescriptor::tower(ell, n);
            CHECK(global_conductor(field).trivial());
            for (long long p : oracle::primes_up_to(40))
                CHECK(local_conductor_exponent(field, p) == 0);
        }
    }
}

TEST_CASE("conductor support is exactly the logarithmically ramified locus") {
    for (long long d = -80; d <= 80; ++d) {
        if (d == 0 || d == 1 || !is_squarefree(d)) continue;
        auto field = FieldDescriptor::quadratic(d);
        auto cond = global_conductor(field);
        for (long long p : oracle::primes_up_to(90)) {
            bool ramified = indices(field, p).e_log > 1;
            CHECK(cond.contains(p) == ramified);
            if (cond.contains(p)) CHECK(cond.exponents.at(p) == 1);
        }
    }
}

TEST_CASE("filtration level of valuation values") {
    Precision p3(3, 5, 0);
    CHECK(filtration_level(LAdicInt(1, p3)) == 0);
    CHECK(filtration_level(LAdicInt(3, p3)) == 1);
    CHECK(filtration_level(LAdicInt(18, p3)) == 2);
    CHECK(!filtration_level(LAdicInt(0, p3)).has_value());

    // Degrees always sit at level >= 1 (>= 2 when ell = 2).
    CHECK(filtration_level(deg_ell(2, p3).value) == 1);
    Precision p2(2, 6, 0);
    CHECK(*filtration_level(deg_ell(3, p2).value) >= 2);
}
