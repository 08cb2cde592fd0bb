#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qre/braid.hpp"
#include "qre/error.hpp"

#include <algorithm>

using namespace qre;

namespace {

REMatrix identity_k(long d) { return make_re_matrix("f", 1, Mat::identity({d})); }

REMatrix diag01_k() {
    Mat m({2}, {2});
    m.at(1, 1) = Scalar(1);
    return make_re_matrix("f", 1, m);
}

REMatrix shear_k() {
    Mat m({2}, {2});
    m.at(0, 0) = Scalar(1);
    m.at(0, 1) = Scalar(1);
    m.at(1, 1) = Scalar(1);
    return make_re_matrix("f", 1, m);
}

bool all_ok(const std::vector<NamedResidual>& rs) {
    return std::all_of(rs.begin(), rs.end(), [](const NamedResidual& r) { return r.res.ok; });
}

const Residual& named(const std::vector<NamedResidual>& rs, const std::string& name) {
    for (const auto& r : rs) {
        if (r.name == name) return r.res;
    }
    throw Error("missing relation " + name);
}

}  // namespace

TEST_CASE("two strands with the identity boundary") {
    const CylinderRep rep = build_cylinder_rep(gl_r_matrix(2), identity_k(2), 2);
    CHECK(rep.sigma.size() == 1);
    CHECK(rep.taus.size() == 1);
    CHECK(rep.taus[0].is_identity());
    CHECK(all_ok(braid_residuals(rep)));
}

TEST_CASE("two strands with diag(0,1)") {
    const CylinderRep rep = build_cylinder_rep(gl_r_matrix(2), diag01_k(), 2);
    const auto rs = braid_residuals(rep);
    CHECK(rs.size() == 1);
    CHECK(rs[0].name == "tau(1)");
    CHECK(rs[0].res.ok);
}

TEST_CASE("three strands with the Q-solution coefficient leg") {
    const Mat r = gl_r_matrix(2);
    const RMatrixFamily fam = RMatrixFamily::single("f", r);
    const REMatrix k = q_solution(fam, "f");
    const CylinderRep rep = build_cylinder_rep(r, k, 3);
    CHECK(rep.sigma[0].rows() == 16);
    const auto rs = braid_residuals(rep);
    CHECK(rs.size() == 2);  // braid(1,2) and tau(1)
    CHECK(all_ok(rs));
}

TEST_CASE("three strands separate sigma and tau verdicts") {
    const Mat r = gl_r_matrix(2);
    const CylinderRep rep = build_cylinder_rep(r, shear_k(), 3);
    const auto rs = braid_residuals(rep);
    CHECK(named(rs, "braid(1,2)").ok);
    CHECK(!named(rs, "tau(1)").ok);
    CHECK(named(rs, "tau(1)").witness.has_value());
}

TEST_CASE("tau relation verdict matches the reflection equation verdict") {
    const Mat r = gl_r_matrix(2);
    const RMatrixFamily fam = RMatrixFamily::single("f", r);
    std::vector<REMatrix> corpus{identity_k(2), diag01_k(), q_solution(fam, "f"), shear_k()};
    {
        Mat lower({2}, {2});
        lower.at(0, 0) = Scalar(1);
        lower.at(1, 0) = Scalar::q(1);
        lower.at(1, 1) = Scalar(1);
        corpus.push_back(make_re_matrix("f", 1, lower));
    }
    for (long n : {2L, 3L}) {
        for (const auto& k : corpus) {
            const CylinderRep rep = build_cylinder_rep(r, k, n);
            const bool tau_ok = named(braid_residuals(rep), "tau(1)").ok;
            CHECK(tau_ok == verify_re(r, k).ok);
        }
    }
}

TEST_CASE("four strands exercise commuting generators") {
    const CylinderRep rep = build_cylinder_rep(gl_r_matrix(2), diag01_k(), 4);
    const auto rs = braid_residuals(rep);
    CHECK(named(rs, "comm(1,3)").ok);
    CHECK(named(rs, "braid(1,2)").ok);
    CHECK(named(rs, "braid(2,3)").ok);
    CHECK(named(rs, "tau(1)").ok);
    CHECK(all_ok(rs));
}

TEST_CASE("extra boundary operators") {
    const Mat r = gl_r_matrix(2);
    const REMatrix k = diag01_k();
    CylinderRep rep = build_cylinder_rep(r, k, 2);
    // an identity boundary operator commutes with everything
    add_boundary_op(rep, Mat::identity(rep.legs));
    const auto rs = braid_residuals(rep);
    CHECK(named(rs, "tau(1)").ok);
    CHECK(named(rs, "tau(2)").ok);
    CHECK(named(rs, "cross(2,1)").ok);

    // a second K-based boundary operator fails the mixed relation: the
    // cylinder relations for two boundary lines need more than one RE matrix
    CylinderRep rep2 = build_cylinder_rep(r, k, 2);
    add_boundary_op(rep2, rep2.taus[0]);
    const auto rs2 = braid_residuals(rep2);
    CHECK(named(rs2, "tau(2)").ok);
    CHECK(!named(rs2, "cross(2,1)").ok);
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(build_cylinder_rep(gl_r_matrix(2), identity_k(2), 1), Error);
    CHECK_THROWS_AS(build_cylinder_rep(gl_r_matrix(2), identity_k(3), 2), Error);
    CHECK_THROWS_AS(build_cylinder_rep(Mat({2}, {2}), identity_k(2), 2), Error);
}
