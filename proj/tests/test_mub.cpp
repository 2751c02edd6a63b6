#include "mubcoh/mub.hpp"

#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "mubcoh/errors.hpp"
#include "mubcoh/states.hpp"

using mubcoh::Basis;
using mubcoh::CMat;
using mubcoh::GaloisField;
using mubcoh::MubSet;

TEST_CASE("the qubit construction yields three bases with all cross overlaps one over sqrt two") {
    const MubSet set = mubcoh::construct_mub(2);
    REQUIRE(set.size() == 3);
    REQUIRE(set.dim == 2);
    const double target = 1.0 / std::sqrt(2.0);
    int overlaps = 0;
    for (int a = 0; a < set.size(); ++a) {
        for (int b = a + 1; b < set.size(); ++b) {
            const CMat g = set.bases[a].vectors.adjoint() * set.bases[b].vectors;
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) {
                    CHECK(std::abs(std::abs(g(i, j)) - target) < 1e-12);
                    ++overlaps;
                }
        }
    }
    CHECK(overlaps == 12);
}

TEST_CASE("the computational basis comes first in every constructed set") {
    for (int d : {2, 3, 5, 9}) {
        const MubSet set = mubcoh::construct_mub(d);
        CHECK((set.bases[0].vectors - CMat::Identity(d, d)).cwiseAbs().maxCoeff() < 1e-15);
    }
}

TEST_CASE("constructed sets for small odd prime dimensions verify to machine precision") {
    for (int d : {3, 5}) {
        const MubSet set = mubcoh::construct_mub(d);
        REQUIRE(set.size() == d + 1);
        const auto v = mubcoh::verify_mub(set, 1e-10);
        CHECK(v.pass);
        CHECK(v.max_ortho_dev < 1e-12);
        CHECK(v.max_unbias_dev < 1e-12);
    }
}

TEST_CASE("unsupported dimensions are rejected including even prime powers") {
    for (int d : {0, 1, 4, 6, 8, 10, 12, 16}) {
        CHECK_THROWS_AS(mubcoh::construct_mub(d), mubcoh::UnsupportedDimension);
    }
}

TEST_CASE("every supported dimension up to forty nine gives d plus one verified unitary bases") {
    for (int d : {2, 3, 5, 7, 9, 11, 13, 17, 19, 23, 25, 27, 29, 31, 37, 41, 43, 47, 49}) {
        const MubSet set = mubcoh::construct_mub(d);
        REQUIRE(set.size() == d + 1);
        for (const Basis& b : set.bases) {
            CHECK((b.vectors.adjoint() * b.vectors - CMat::Identity(d, d)).cwiseAbs().maxCoeff() <
                  1e-10);
        }
        const auto v = mubcoh::verify_mub(set, 1e-10);
        CHECK(v.pass);
        CHECK(v.max_ortho_dev <= 1e-11);
        CHECK(v.max_unbias_dev <= 1e-11);
    }
}

TEST_CASE("a single basis passes verification vacuously") {
    MubSet one;
    one.dim = 3;
    one.bases.push_back(Basis{CMat::Identity(3, 3)});
    const auto v = mubcoh::verify_mub(one, 1e-12);
    CHECK(v.pass);
    CHECK(v.max_unbias_dev == 0.0);
}

TEST_CASE("a perturbed component is flagged with a deviation near the perturbation size") {
    MubSet set = mubcoh::construct_mub(2);
    set.bases[1].vectors(0, 0) += 1e-3;
    const auto v = mubcoh::verify_mub(set, 1e-6);
    CHECK_FALSE(v.pass);
    const double dev = std::max(v.max_ortho_dev, v.max_unbias_dev);
    CHECK(dev > 1e-4);
    CHECK(dev < 1e-2);
}

TEST_CASE("verification rejects sets whose bases disagree on the dimension") {
    MubSet set;
    set.dim = 2;
    set.bases.push_back(Basis{CMat::Identity(2, 2)});
    set.bases.push_back(Basis{CMat::Identity(3, 3)});
    CHECK_THROWS_AS(mubcoh::verify_mub(set, 1e-9), mubcoh::DimensionMismatch);
}

TEST_CASE("rotating all bases by a common unitary preserves mutual unbiasedness") {
    for (int d : {3, 7}) {
        MubSet set = mubcoh::construct_mub(d);
        const CMat u = mubcoh::sample_unitary(d, 97);
        for (Basis& b : set.bases) b.vectors = u * b.vectors;
        const auto v = mubcoh::verify_mub(set, 1e-9);
        CHECK(v.pass);
    }
}

TEST_CASE("serialization round trips bit-for-bit through the json form") {
    for (int d : {2, 3, 9}) {
        const MubSet set = mubcoh::construct_mub(d);
        const MubSet back = mubcoh::parse_mub_file(mubcoh::serialize_mub(set));
        REQUIRE(back.size() == set.size());
        CHECK(back.dim == set.dim);
        CHECK(back.label == set.label);
        for (int t = 0; t < set.size(); ++t) {
            CHECK((back.bases[t].vectors - set.bases[t].vectors).cwiseAbs().maxCoeff() <= 1e-15);
        }
    }
}

TEST_CASE("malformed json shapes raise parse errors") {
    CHECK_THROWS_AS(mubcoh::parse_mub_json("not json at all"), mubcoh::ParseError);
    CHECK_THROWS_AS(mubcoh::parse_mub_json("{\"d\": 2, \"label\": \"x\"}"), mubcoh::ParseError);
    CHECK_THROWS_AS(mubcoh::parse_mub_json("{\"d\": 2, \"label\": \"x\", \"bases\": [[[[1.0], [0.0]], [[0.0], [1.0]]]]}"),
                    mubcoh::ParseError);
    CHECK_THROWS_AS(
        mubcoh::parse_mub_json("{\"d\": 3, \"label\": \"x\", \"bases\": [[[[1,0],[0,0]],[[0,0],[1,0]]]]}"),
        mubcoh::ParseError);
}

TEST_CASE("a file with two copies of the computational basis is rejected as biased") {
    MubSet twice;
    twice.dim = 2;
    twice.label = "twice";
    twice.bases.push_back(Basis{CMat::Identity(2, 2)});
    twice.bases.push_back(Basis{CMat::Identity(2, 2)});
    const std::string json = mubcoh::serialize_mub(twice);
    CHECK_NOTHROW(mubcoh::parse_mub_json(json));
    CHECK_THROWS_AS(mubcoh::parse_mub_file(json), mubcoh::NotUnbiased);
}

TEST_CASE("truncation keeps the leading bases and the label") {
    const MubSet set = mubcoh::construct_mub(5);
    const MubSet cut = set.truncated(3);
    REQUIRE(cut.size() == 3);
    CHECK(cut.dim == 5);
    CHECK(cut.label == set.label);
    for (int t = 0; t < 3; ++t) {
        CHECK((cut.bases[t].vectors - set.bases[t].vectors).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("galois field moduli are the lexicographically smallest irreducible choices") {
    const GaloisField f9(3, 2);
    CHECK(f9.q() == 9);
    CHECK(f9.modulus() == std::vector<int>{1, 0, 1});
    const GaloisField f27(3, 3);
    CHECK(f27.q() == 27);
    CHECK(f27.modulus() == std::vector<int>{1, 2, 0, 1});
}

TEST_CASE("galois field arithmetic satisfies the field axioms on samples") {
    const GaloisField f(3, 2);
    const int q = f.q();
    for (int a = 0; a < q; ++a) {
        CHECK(f.mul(a, 1) == a);
        CHECK(f.mul(a, 0) == 0);
        CHECK(f.add(a, 0) == a);
        for (int b = 0; b < q; ++b) {
            CHECK(f.mul(a, b) == f.mul(b, a));
            for (int c = 0; c < q; ++c) {
                CHECK(f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c));
                CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            }
        }
    }
    // every nonzero element has an inverse
    for (int a = 1; a < q; ++a) {
        bool found = false;
        for (int b = 1; b < q; ++b) found = found || (f.mul(a, b) == 1);
        CHECK(found);
    }
}

TEST_CASE("the field trace lands in the prime subfield and is additive and balanced") {
    for (auto [p, n] : {std::pair{3, 2}, std::pair{3, 3}, std::pair{5, 2}, std::pair{7, 2}}) {
        const GaloisField f(p, n);
        std::vector<int> counts(p, 0);
        for (int a = 0; a < f.q(); ++a) {
            const int t = f.trace(a);
            CHECK(t >= 0);
            CHECK(t < p);
            ++counts[t];
            for (int b = 0; b < f.q(); ++b) {
                CHECK(f.trace(f.add(a, b)) == (f.trace(a) + f.trace(b)) % p);
            }
        }
        // the trace is a balanced map onto Z_p
        for (int v = 0; v < p; ++v) CHECK(counts[v] == f.q() / p);
    }
}
