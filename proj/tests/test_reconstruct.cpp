// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include "curlcurl/io.hpp"
#include "curlcurl/reconstruct3d.hpp"

using namespace curlcurl;

TEST_CASE("zero profile reconstructs to the zero field") {
    auto g = make_grid(6.0, 6.0, 33, 33);
    CylField u(g);
    VectorField3D U = reconstruct(u, 4.0, 17);
    for (double x : U.u1) CHECK(x == 0.0);
    for (double x : U.u2) CHECK(x == 0.0);
    for (double x : U.u3) CHECK(x == 0.0);
}

TEST_CASE("constant profile gives the rigid rotation field") {
    auto g = make_grid(6.0, 6.0, 33, 33);
    CylField u(g);
    u.fill([](double, double) { return 1.0; });
    const double L = 4.0;  // sqrt(2) L < rmax, no zero-extension hit
    VectorField3D U = reconstruct(u, L, 21);
    for (int a = 0; a < U.n; ++a)
        for (int b = 0; b < U.n; ++b)
            for (int c = 0; c < U.n; ++c) {
                const int k = U.index(a, b, c);
                CHECK(U.u1[k] == doctest::Approx(-U.coord(b)).epsilon(1e-13));
                CHECK(U.u2[k] == doctest::Approx(U.coord(a)).epsilon(1e-13));
                CHECK(U.u3[k] == 0.0);
            }
}

TEST_CASE("reconstruction preconditions") {
    auto g = make_grid(6.0, 6.0, 33, 33);
    CylField u(g);
    CHECK_THROWS_AS(reconstruct(u, 6.5, 17), std::invalid_argument);
    CHECK_THROWS_AS(reconstruct(u, 4.0, 3), std::invalid_argument);
}

TEST_CASE("|U| is axially symmetric for a smooth profile") {
    auto g = make_grid(8.0, 8.0, 129, 129);
    CylField u = gaussian_field(g);
    VectorField3D U = reconstruct(u, 4.0, 41);
    const FieldInterpolant interp(u);
    // |U|(x) should depend only on (r, x3): compare against r*u(r,x3).
    double emax = 0.0;
    for (int a = 0; a < U.n; ++a)
        for (int b = 0; b < U.n; ++b)
            for (int c = 0; c < U.n; ++c) {
                const double x1 = U.coord(a), x2 = U.coord(b), x3 = U.coord(c);
                const double r = std::hypot(x1, x2);
                const int k = U.index(a, b, c);
                const double mag = std::hypot(U.u1[k], U.u2[k]);
                emax = std::max(emax, std::fabs(mag - r * interp(r, x3)));
            }
    CHECK(emax <= 1e-12);
}

TEST_CASE("divergence stencil calibration") {
    // U = (x1, 0, 0) has div = 1 exactly under central differences.
    VectorField3D U;
    U.L = 2.0;
    U.n = 11;
    U.h = 2.0 * U.L / (U.n - 1);
    const size_t total = 11 * 11 * 11;
    U.u1.assign(total, 0.0);
    U.u2.assign(total, 0.0);
    U.u3.assign(total, 0.0);
    for (int a = 0; a < U.n; ++a)
        for (int b = 0; b < U.n; ++b)
            for (int c = 0; c < U.n; ++c) U.u1[U.index(a, b, c)] = U.coord(a);
    ScalarField3D div = divergence(U);
    for (int a = 1; a < U.n - 1; ++a)
        for (int b = 1; b < U.n - 1; ++b)
            for (int c = 1; c < U.n - 1; ++c)
                CHECK(div.v[div.index(a, b, c)] == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("rigid rotation field: exact zero divergence, residual equals r") {
    auto g = make_grid(8.0, 8.0, 65, 65);
    CylField u(g);
    u.fill([](double, double) { return 1.0; });
    VectorField3D U = reconstruct(u, 4.0, 21);
    ScalarField3D div = divergence(U);
    CHECK(max_abs3d(div) <= 1e-13);

    // curl curl of a linear field vanishes; with V = 1, f = 0 the residual is |U| = r.
    const Nonlinearity f0 = Nonlinearity::custom([](double, double, double) { return 0.0; },
                                                 [](double, double, double) { return 0.0; }, 3.0);
    ScalarField3D res = curl_curl_residual(U, Potential::constant(1.0), f0);
    for (int a = 2; a < U.n - 2; ++a)
        for (int b = 2; b < U.n - 2; ++b)
            for (int c = 2; c < U.n - 2; ++c) {
                const double r = std::hypot(U.coord(a), U.coord(b));
                if (r <= 2.0 * U.h) continue;
                CHECK(res.v[res.index(a, b, c)] == doctest::Approx(r).epsilon(1e-12));
            }
}

TEST_CASE("divergence of a reconstructed smooth profile converges at order 2") {
    auto g = make_grid(8.0, 8.0, 129, 129);
    CylField u = gaussian_field(g);
    double errs[2];
    int k = 0;
    for (int n : {25, 49}) {
        VectorField3D U = reconstruct(u, 4.0, n);
        errs[k++] = max_abs3d(divergence(U));
    }
    CHECK(std::log2(errs[0] / errs[1]) >= 1.8);
}

TEST_CASE("vector residual is r times the scalar residual (simultaneous refinement)") {
    const Potential V = Potential::constant(1.0);
    const Nonlinearity f = Nonlinearity::power(3.0);
    double errs[2];
    int k = 0;
    for (auto [nscal, n3d] : {std::pair{65, 25}, std::pair{129, 49}}) {
        auto g = make_grid(8.0, 8.0, nscal, nscal);
        CylField u = gaussian_field(g);
        apply_dirichlet(u);
        VectorField3D U = reconstruct(u, 4.0, n3d);
        ScalarField3D res3 = curl_curl_residual(U, V, f);
        const FieldInterpolant scal(pde_residual(u, V, f));
        double emax = 0.0;
        for (int a = 2; a < U.n - 2; ++a)
            for (int b = 2; b < U.n - 2; ++b) {
                const double r = std::hypot(U.coord(a), U.coord(b));
                if (r <= 2.0 * U.h) continue;
                for (int c = 2; c < U.n - 2; ++c) {
                    const double expect = r * std::fabs(scal(r, U.coord(c)));
                    emax = std::max(emax,
                                    std::fabs(res3.v[res3.index(a, b, c)] - expect));
                }
            }
        errs[k++] = emax;
    }
    CHECK(std::log2(errs[0] / errs[1]) >= 1.8);
}

TEST_CASE("VTK and slice exports have the documented shape") {
    auto g = make_grid(6.0, 6.0, 33, 33);
    CylField u = gaussian_field(g);
    VectorField3D U = reconstruct(u, 4.0, 9);
    ScalarField3D res = divergence(U);
    write_vtk(U, res, "test_recon.vtk");
    write_slice_csv(U, "test_recon_slice.csv");

    std::ifstream vtk("test_recon.vtk");
    std::string line;
    std::getline(vtk, line);
    CHECK(line == "# vtk DataFile Version 3.0");
    int vectors = 0, scalars = 0, points = 0;
    while (std::getline(vtk, line)) {
        if (line.rfind("VECTORS U double", 0) == 0) ++vectors;
        if (line.rfind("SCALARS residual double 1", 0) == 0) ++scalars;
        if (line.rfind("POINT_DATA", 0) == 0) points = std::stoi(line.substr(11));
    }
    CHECK(vectors == 1);
    CHECK(scalars == 1);
    CHECK(points == 9 * 9 * 9);

    std::ifstream slice("test_recon_slice.csv");
    std::getline(slice, line);
    CHECK(line == "x1,x2,x3,U1,U2,U3");
    int rows = 0;
    while (std::getline(slice, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 9 * 9);
    std::remove("test_recon.vtk");
    std::remove("test_recon_slice.csv");
}
