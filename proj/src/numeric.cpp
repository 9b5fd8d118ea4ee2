#include "lambdacav/numeric.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

namespace lambdacav::numeric {

namespace {
constexpr long double kTwoPi = 6.283185307179586476925286766559005768L;
}

cplx phase_exp(double w, double t) {
    const long double r = std::fmod(static_cast<long double>(w) * static_cast<long double>(t), kTwoPi);
    const auto x = static_cast<double>(r);
    return {std::cos(x), std::sin(x)};
}

bool cubic_near_triple(double x1, double x2) {
    const double q = x1 * x1 - 3.0 * x2;
    return q <= 1e-14 * std::max(1.0, x1 * x1);
}

TrigCubicRoots solve_trig_cubic(double x1, double x2, double x3) {
    if (cubic_near_triple(x1, x2)) {
        throw std::domain_error("solve_trig_cubic: near-triple root, discriminant degenerate");
    }
    const long double c1 = x1, c2 = x2, c3 = x3;
    const long double q = c1 * c1 - 3.0L * c2;
    const long double s = std::sqrt(q);
    long double arg = (9.0L * c1 * c2 - 2.0L * c1 * c1 * c1 - 27.0L * c3) / (2.0L * q * s);
    if (arg > 1.0L) {
        if (arg > 1.0L + 1e-12L) throw std::domain_error("solve_trig_cubic: complex root pair");
        arg = 1.0L;
    } else if (arg < -1.0L) {
        if (arg < -1.0L - 1e-12L) throw std::domain_error("solve_trig_cubic: complex root pair");
        arg = -1.0L;
    }
    const long double phi = std::acos(arg) / 3.0L;

    TrigCubicRoots out{};
    out.phi = static_cast<double>(phi);
    for (int m = 0; m < 3; ++m) {
        long double r = -c1 / 3.0L + (2.0L / 3.0L) * s * std::cos(phi + kTwoPi * m / 3.0L);
        for (int it = 0; it < 2; ++it) {
            const long double p = ((r + c1) * r + c2) * r + c3;
            const long double dp = (3.0L * r + 2.0L * c1) * r + c2;
            if (dp == 0.0L) break;
            const long double step = p / dp;
            if (std::abs(step) > 0.5L * (1.0L + std::abs(r))) break;  // double root; leave as-is
            r -= step;
        }
        out.roots[m] = static_cast<double>(r);
    }
    return out;
}

Herm3Eigen jacobi_hermitian3(const std::array<cplx, 9>& in) {
    std::array<std::array<cplx, 3>, 3> a;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) a[r][c] = 0.5 * (in[3 * r + c] + std::conj(in[3 * c + r]));

    std::array<std::array<cplx, 3>, 3> v{{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}}};

    const double scale = std::max({1e-300, std::abs(a[0][0]), std::abs(a[1][1]), std::abs(a[2][2]),
                                   std::abs(a[0][1]), std::abs(a[0][2]), std::abs(a[1][2])});
    for (int sweep = 0; sweep < 60; ++sweep) {
        const double off = std::norm(a[0][1]) + std::norm(a[0][2]) + std::norm(a[1][2]);
        if (off <= 1e-64 * scale * scale) break;
        for (int p = 0; p < 2; ++p) {
            for (int q = p + 1; q < 3; ++q) {
                const cplx apq = a[p][q];
                const double mag = std::abs(apq);
                if (mag <= 1e-300) continue;
                const cplx u = apq / mag;  // e^{i phase}
                const double tau = (std::real(a[q][q]) - std::real(a[p][p])) / (2.0 * mag);
                const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                              : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                // columns p, q mix through J = [[c, s], [-s e^{-i phase}, c e^{-i phase}]]
                const cplx jpp = c, jpq = s;
                const cplx jqp = -s * std::conj(u), jqq = c * std::conj(u);
                for (int r = 0; r < 3; ++r) {  // A <- A J, V <- V J
                    const cplx arp = a[r][p], arq = a[r][q];
                    a[r][p] = arp * jpp + arq * jqp;
                    a[r][q] = arp * jpq + arq * jqq;
                    const cplx vrp = v[r][p], vrq = v[r][q];
                    v[r][p] = vrp * jpp + vrq * jqp;
                    v[r][q] = vrp * jpq + vrq * jqq;
                }
                for (int r = 0; r < 3; ++r) {  // A <- J^H A
                    const cplx apr = a[p][r], aqr = a[q][r];
                    a[p][r] = std::conj(jpp) * apr + std::conj(jqp) * aqr;
                    a[q][r] = std::conj(jpq) * apr + std::conj(jqq) * aqr;
                }
                a[p][q] = 0.0;
                a[q][p] = 0.0;
            }
        }
    }

    Herm3Eigen out{};
    std::array<int, 3> order{0, 1, 2};
    std::array<double, 3> d{std::real(a[0][0]), std::real(a[1][1]), std::real(a[2][2])};
    if (d[order[0]] > d[order[1]]) std::swap(order[0], order[1]);
    if (d[order[1]] > d[order[2]]) std::swap(order[1], order[2]);
    if (d[order[0]] > d[order[1]]) std::swap(order[0], order[1]);
    for (int k = 0; k < 3; ++k) {
        out.values[k] = d[order[k]];
        for (int i = 0; i < 3; ++i) out.vectors[k][i] = v[i][order[k]];
    }
    return out;
}

PoissonCut poisson_cutoff(double lambda, double eps) {
    if (!(lambda >= 0.0)) throw std::domain_error("poisson_cutoff: negative intensity");
    if (!(eps > 0.0 && eps < 1.0)) throw std::domain_error("poisson_cutoff: eps must lie in (0, 1)");
    if (lambda == 0.0) return {0, 0.0};
    long double p = std::exp(static_cast<long double>(-lambda));
    long double cum = p;
    int n = 0;
    while (1.0L - cum >= static_cast<long double>(eps)) {
        if (++n > 100000) throw std::domain_error("poisson_cutoff: intensity too large");
        p *= lambda / n;
        cum += p;
    }
    return {n, static_cast<double>(1.0L - cum)};
}

double poisson_tail(double lambda, int n) {
    if (lambda == 0.0) return 0.0;
    long double p = std::exp(static_cast<long double>(-lambda));
    long double cum = p;
    for (int k = 1; k <= n; ++k) {
        p *= lambda / k;
        cum += p;
    }
    return static_cast<double>(std::max(0.0L, 1.0L - cum));
}

void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    if (threads == 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
    };
    std::vector<std::thread> pool;
    const unsigned count = static_cast<unsigned>(std::min<std::size_t>(threads, n));
    pool.reserve(count - 1);
    for (unsigned k = 1; k < count; ++k) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
}

}  // namespace lambdacav::numeric
