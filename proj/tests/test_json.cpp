#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qre/error.hpp"
#include "qre/json_io.hpp"

#include <random>

using namespace qre;

namespace {

Scalar lambda() { return Scalar::q(1) - Scalar::q(-1); }

Scalar random_scalar(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coef(-5, 5);
    std::uniform_int_distribution<int> exp(-4, 4);
    std::uniform_int_distribution<int> nterms(1, 4);
    auto poly = [&]() {
        std::vector<Term> ts;
        const int n = nterms(rng);
        for (int i = 0; i < n; ++i) ts.push_back({Rat(coef(rng)), exp(rng)});
        return Laurent::from_terms(ts);
    };
    Laurent den;
    do {
        den = poly();
    } while (den.is_zero());
    return Scalar(poly(), den);
}

Mat random_mat(std::mt19937_64& rng, long rows_leg, long cols_leg) {
    Mat m({rows_leg}, {cols_leg});
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = random_scalar(rng);
    }
    return m;
}

}  // namespace

TEST_CASE("scalar canonical JSON") {
    const Json j = scalar_to_json(lambda());
    CHECK(j.dump() == R"({"n":[["1",1],["-1",-1]]})");
    CHECK(scalar_from_json(j) == lambda());

    const Scalar frac = Scalar(Laurent::constant(1),
                               Laurent::from_terms({{Rat(1), 2}, {Rat(1), 0}}));  // 1/(q^2+1)
    const Json jf = scalar_to_json(frac);
    CHECK(jf.dump() == R"({"n":[["1",0]],"d":[["1",2],["1",0]]})");
    CHECK(scalar_from_json(jf) == frac);

    CHECK(scalar_to_json(Scalar()).dump() == R"({"n":[]})");
}

TEST_CASE("scalar JSON is canonicalized on input") {
    const Json j = Json::parse(R"({"n":[["2",1]],"d":[["4",0]]})");
    const Scalar s = scalar_from_json(j);
    CHECK(s == Scalar(Rat(1, 2)) * Scalar::q(1));
    CHECK(scalar_to_json(s).dump() == R"({"n":[["1/2",1]]})");
}

TEST_CASE("malformed scalar JSON") {
    CHECK_THROWS_AS(scalar_from_json(Json::parse("[]")), Error);
    CHECK_THROWS_AS(scalar_from_json(Json::parse(R"({"n":[["x",1]]})")), Error);
    CHECK_THROWS_AS(scalar_from_json(Json::parse(R"({"n":[[1,1]]})")), Error);
    CHECK_THROWS_AS(scalar_from_json(Json::parse(R"({"n":[["1"]]})")), Error);
    CHECK_THROWS_AS(scalar_from_json(Json::parse(R"({"n":[["1",0]],"d":[]})")), Error);
}

TEST_CASE("matrix JSON carries leg metadata") {
    const Mat r = gl_r_matrix(2);
    const Json j = mat_to_json(r);
    CHECK(j["row_legs"] == Json::array({2, 2}));
    const Mat back = mat_from_json(j);
    CHECK(back == r);

    Json wrong = j;
    wrong["entries"].erase(0);
    CHECK_THROWS_AS(mat_from_json(wrong), Error);
    CHECK_THROWS_AS(mat_from_json(Json::parse(R"({"row_legs":[2]})")), Error);
}

TEST_CASE("RE matrix JSON normalizes the leg split") {
    Mat m = Mat::identity({2});
    Json j;
    j["rep"] = "f";
    j["coeff_dim"] = 1;
    j["matrix"] = mat_to_json(m);
    const REMatrix k = re_matrix_from_json(j);
    CHECK(k.k.row_legs() == std::vector<long>{2, 1});
    const Json out = re_matrix_to_json(k);
    CHECK(re_matrix_from_json(out) == k);
    CHECK_THROWS_AS(re_matrix_from_json(Json::parse(R"({"rep":"f"})")), Error);

    Json badk = j;
    badk["coeff_dim"] = 3;  // 2 is not divisible by 3
    CHECK_THROWS_AS(re_matrix_from_json(badk), Error);
}

TEST_CASE("family and RE data JSON round trip") {
    const Mat r = gl_r_matrix(2);
    REData data;
    data.family = RMatrixFamily::uniform({"a", "b"}, r);
    data.triples["a"] = make_re_matrix("a", 1, Mat::identity({2}));
    data.triples["b"] = make_re_matrix("b", 1, Mat::identity({2}));
    const Json j = re_data_to_json(data);
    const REData back = re_data_from_json(j);
    CHECK(back == data);
    CHECK(dump_canonical(re_data_to_json(back)) == dump_canonical(j));

    Json mismatch = j;
    mismatch["triples"]["a"]["rep"] = "b";
    CHECK_THROWS_AS(re_data_from_json(mismatch), Error);
}

TEST_CASE("residual JSON") {
    Mat diff({2}, {2});
    CHECK(residual_to_json(Residual::from_difference(diff)).dump() == R"({"ok":true})");
    diff.at(0, 1) = lambda();
    const Json j = residual_to_json(Residual::from_difference(diff));
    CHECK(j["ok"] == false);
    CHECK(j["witness"][0] == 1);
    CHECK(j["witness"][1] == 2);
}

TEST_CASE("random round trips are bit-exact") {
    std::mt19937_64 rng(20260810);
    for (int iter = 0; iter < 100; ++iter) {
        const Scalar s = random_scalar(rng);
        const std::string dumped = dump_canonical(scalar_to_json(s));
        const Scalar back = scalar_from_json(Json::parse(dumped));
        CHECK(back == s);
        CHECK(dump_canonical(scalar_to_json(back)) == dumped);
    }
    for (int iter = 0; iter < 20; ++iter) {
        const Mat m = random_mat(rng, 3, 2);
        const std::string dumped = dump_canonical(mat_to_json(m));
        const Mat back = mat_from_json(Json::parse(dumped));
        CHECK(back == m);
        CHECK(dump_canonical(mat_to_json(back)) == dumped);
    }
    for (int iter = 0; iter < 20; ++iter) {
        Mat m = random_mat(rng, 4, 4);
        const REMatrix k = make_re_matrix("f", 2, m);
        const std::string dumped = dump_canonical(re_matrix_to_json(k));
        const REMatrix back = re_matrix_from_json(Json::parse(dumped));
        CHECK(back == k);
        CHECK(dump_canonical(re_matrix_to_json(back)) == dumped);
    }
}
