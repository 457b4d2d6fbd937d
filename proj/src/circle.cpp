#include "omegasum/circle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <json.hpp>

#include "omegasum/accum.hpp"
#include "omegasum/errors.hpp"
#include "omegasum/expsum.hpp"

namespace omegasum {

namespace {

// Trial-division helpers for the small moduli (q <= a few thousand) used by
// the singular-series machinery; they avoid dragging a sieve into every call.
std::vector<std::pair<std::uint64_t, int>> factor_small(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, int>> f;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        f.emplace_back(p, e);
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

int mu_small(const std::vector<std::pair<std::uint64_t, int>>& f) {
    int s = 1;
    for (auto [p, e] : f) {
        if (e > 1) return 0;
        s = -s;
    }
    return s;
}

std::uint64_t phi_small(const std::vector<std::pair<std::uint64_t, int>>& f) {
    std::uint64_t r = 1;
    for (auto [p, e] : f) {
        std::uint64_t pk = 1;
        for (int i = 0; i < e; ++i) pk *= p;
        r *= pk - pk / p;
    }
    return r;
}

int big_omega_small(const std::vector<std::pair<std::uint64_t, int>>& f) {
    int c = 0;
    for (auto [p, e] : f) c += e;
    return c;
}

std::vector<std::uint64_t> divisors_small(const std::vector<std::pair<std::uint64_t, int>>& f) {
    std::vector<std::uint64_t> divs{1};
    for (auto [p, e] : f) {
        std::size_t sz = divs.size();
        std::uint64_t pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < sz; ++j) divs.push_back(divs[j] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

// (Omega * mu)(q)
double omega_mu_convolve(std::uint64_t q) {
    auto fq = factor_small(q);
    double acc = 0.0;
    for (std::uint64_t d : divisors_small(fq)) {
        auto fd = factor_small(d);
        auto fc = factor_small(q / d);
        acc += big_omega_small(fd) * mu_small(fc);
    }
    return acc;
}

double frak_f_impl(std::uint64_t q, double x, int M, const CoeffTable& coeffs) {
    if (q < 1) throw std::invalid_argument("frak_f: q must be >= 1");
    auto fq = factor_small(q);
    KahanSum inner;
    inner.add(omega_mu_convolve(q));
    for (std::uint64_t g : divisors_small(fq)) {
        auto fg = factor_small(g);
        int mug = mu_small(fg);
        if (mug == 0) continue;
        double arg = x * double(g) / double(q);
        if (!(arg > std::numbers::e))
            throw std::invalid_argument("frak_f: x*g/q must exceed e (log log domain)");
        double L = std::log(arg);
        double ll = std::log(L);
        double gterm = 0.0;
        for (int j = 1; j <= M; ++j)
            gterm += coeffs.at(j, static_cast<long long>(g)).eval(ll) / std::pow(L, j - 1);
        inner.add(double(g) * mug / double(phi_small(fg)) * gterm);
    }
    return x / double(q) * inner.value();
}

}  // namespace

const CoeffPoly& CoeffTable::at(int j, long long g) const {
    auto it = entries.find({j, g});
    if (it == entries.end())
        throw std::runtime_error("CoeffTable: missing coefficient (j=" + std::to_string(j) +
                                 ", g=" + std::to_string(g) + ")");
    return it->second;
}

bool CoeffTable::covers(long long g, int M_used) const {
    for (int j = 1; j <= M_used; ++j)
        if (!entries.count({j, g})) return false;
    return true;
}

std::string CoeffTable::to_json() const {
    nlohmann::json doc;
    doc["M"] = M;
    doc["provenance"] = provenance;
    doc["entries"] = nlohmann::json::array();
    for (const auto& [key, poly] : entries)
        doc["entries"].push_back(
            {{"j", key.first}, {"g", key.second}, {"b", poly.b}, {"B", poly.B}});
    return doc.dump(2);
}

CoeffTable CoeffTable::from_json(const std::string& text) {
    nlohmann::json doc = nlohmann::json::parse(text);
    CoeffTable t;
    t.M = doc.at("M").get<int>();
    t.provenance = doc.value("provenance", "user-supplied");
    for (const auto& e : doc.at("entries"))
        t.entries[{e.at("j").get<int>(), e.at("g").get<long long>()}] =
            CoeffPoly{e.at("b").get<double>(), e.at("B").get<double>()};
    return t;
}

std::int64_t summatory_omega_ap(const FactorTable& t, std::uint64_t x, std::uint64_t q,
                                std::uint64_t h) {
    if (x > t.limit()) throw std::out_of_range("summatory_omega_ap: x beyond sieve range");
    if (q < 1 || h < 1 || h > q) throw std::invalid_argument("summatory_omega_ap: need 1 <= h <= q");
    std::int64_t acc = 0;
    for (std::uint64_t n = h; n <= x; n += q) acc += t.big_omega(n);
    return acc;
}

namespace {

// Solve the normal equations of the fit; throws fit_error when the design is
// numerically singular (x grid too narrow).
std::vector<double> solve_lls(const std::vector<std::vector<double>>& A,
                              const std::vector<double>& y) {
    const std::size_t rows = A.size(), cols = A[0].size();
    std::vector<std::vector<double>> G(cols, std::vector<double>(cols + 1, 0.0));
    for (std::size_t i = 0; i < cols; ++i) {
        for (std::size_t j = 0; j < cols; ++j)
            for (std::size_t r = 0; r < rows; ++r) G[i][j] += A[r][i] * A[r][j];
        for (std::size_t r = 0; r < rows; ++r) G[i][cols] += A[r][i] * y[r];
    }
    double scale = 0.0;
    for (std::size_t i = 0; i < cols; ++i) scale = std::max(scale, std::abs(G[i][i]));
    for (std::size_t col = 0; col < cols; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < cols; ++r)
            if (std::abs(G[r][col]) > std::abs(G[piv][col])) piv = r;
        if (std::abs(G[piv][col]) < 1e-12 * scale)
            throw fit_error("fit_coeffs: ill-conditioned design matrix (widen the x grid)");
        std::swap(G[col], G[piv]);
        for (std::size_t r = 0; r < cols; ++r) {
            if (r == col) continue;
            double m = G[r][col] / G[col][col];
            for (std::size_t c = col; c <= cols; ++c) G[r][c] -= m * G[col][c];
        }
    }
    std::vector<double> sol(cols);
    for (std::size_t i = 0; i < cols; ++i) sol[i] = G[i][cols] / G[i][i];
    return sol;
}

}  // namespace

FitResult fit_coeffs_from_omega(const std::vector<std::int32_t>& omega,
                                const std::vector<long long>& moduli, int M,
                                const std::vector<std::uint64_t>& xgrid) {
    if (M != 1 && M != 2) throw std::invalid_argument("fit_coeffs: M must be 1 or 2");
    if (xgrid.size() < static_cast<std::size_t>(2 * M + 1))
        throw std::invalid_argument("fit_coeffs: x grid too small");
    std::vector<std::uint64_t> grid = xgrid;
    std::sort(grid.begin(), grid.end());
    if (grid.back() + 1 > omega.size())
        throw std::out_of_range("fit_coeffs: grid beyond Omega table");
    if (std::log10(double(grid.back())) - std::log10(double(grid.front())) < 2.0)
        throw fit_error("fit_coeffs: x grid must span at least two decades");

    FitResult result;
    result.table.M = M;
    result.table.provenance = "fitted";

    for (long long g : moduli) {
        if (g < 1) throw std::invalid_argument("fit_coeffs: moduli must be >= 1");
        // partial sums of Omega over the class n == 1 (mod g) at grid points
        std::vector<std::int64_t> S(grid.size());
        std::int64_t acc = 0;
        std::size_t gi = 0;
        for (std::uint64_t n = 1; n < omega.size() && gi < grid.size(); n += g) {
            while (gi < grid.size() && n > grid[gi]) S[gi++] = acc;
            if (gi == grid.size()) break;
            acc += omega[n];
        }
        while (gi < grid.size()) S[gi++] = acc;

        auto fg = factor_small(static_cast<std::uint64_t>(g));
        const double phig = double(phi_small(fg));
        std::vector<std::vector<double>> A;
        std::vector<double> y;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double L = std::log(double(grid[i]));
            const double ll = std::log(L);
            std::vector<double> row;
            for (int j = 1; j <= M; ++j) {
                row.push_back(ll / std::pow(L, j - 1));
                row.push_back(1.0 / std::pow(L, j - 1));
            }
            A.push_back(std::move(row));
            y.push_back(double(S[i]) * phig / double(grid[i]));
        }
        auto sol = solve_lls(A, y);
        for (int j = 1; j <= M; ++j)
            result.table.entries[{j, g}] = CoeffPoly{sol[2 * (j - 1)], sol[2 * (j - 1) + 1]};

        KahanSum rss;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            double pred = 0.0;
            for (std::size_t c = 0; c < sol.size(); ++c) pred += A[i][c] * sol[c];
            rss.add((pred - y[i]) * (pred - y[i]));
        }
        result.residual_norms[g] = std::sqrt(rss.value() / double(grid.size()));
    }
    return result;
}

FitResult fit_coeffs(const FactorTable& t, const std::vector<long long>& moduli, int M,
                     const std::vector<std::uint64_t>& xgrid) {
    std::uint64_t xmax = 0;
    for (std::uint64_t x : xgrid) xmax = std::max(xmax, x);
    if (xmax > t.limit()) throw std::out_of_range("fit_coeffs: grid beyond sieve range");
    return fit_coeffs_from_omega(t.omega_table(xmax), moduli, M, xgrid);
}

double frak_f(const FactorTable& t, std::uint64_t q, double x, int M,
              const CoeffTable& coeffs) {
    if (q > t.limit()) throw std::out_of_range("frak_f: q beyond sieve range");
    return frak_f_impl(q, x, M, coeffs);
}

SingularSeriesResult singular_series(const FactorTable& t, std::uint64_t N, int M,
                                     std::uint64_t Q, const CoeffTable& coeffs) {
    if (Q < 1) throw std::invalid_argument("singular_series: Q must be >= 1");
    SingularSeriesResult result{N, M, Q, 0.0, 0.0, {}};
    result.terms.reserve(Q);
    KahanSum partial;
    for (std::uint64_t q = 1; q <= Q; ++q) {
        double fq = frak_f_impl(q, double(N), M, coeffs) / double(N);
        double term = fq * fq * fq * double(t.ramanujan_mu(q, N));
        result.terms.push_back(term);
        partial.add(term);
    }
    result.partial = partial.value();
    const double ll = std::log(std::log(double(N)));
    result.tail_estimate = std::pow(double(M) * ll, 3.0) / std::pow(double(Q), 0.9);
    return result;
}

std::complex<double> u_cube_integral(std::uint64_t N, double Q, std::size_t K) {
    if (K < 10000) throw std::invalid_argument("u_cube_integral: need K >= 1e4 nodes");
    double W = std::min(Q / double(N), 0.5);
    std::size_t n = K % 2 == 0 ? K : K + 1;  // even subinterval count for Simpson
    const double h = 2.0 * W / double(n);
    auto integrand = [N](double beta) {
        std::complex<double> u = u_sum(beta, N);
        return u * u * u * std::polar(1.0, -2.0 * std::numbers::pi * double(N) * beta);
    };
    KahanComplexSum acc;
    acc.add(integrand(-W));
    acc.add(integrand(W));
    for (std::size_t i = 1; i < n; ++i)
        acc.add((i % 2 == 1 ? 4.0 : 2.0) * integrand(-W + h * double(i)));
    return acc.value() * (h / 3.0);
}

std::complex<double> u_cube_full_circle(std::uint64_t N, std::size_t K) {
    if (K < 3 * N + 1)
        throw std::invalid_argument("u_cube_full_circle: K below exactness threshold");
    KahanComplexSum acc;
    for (std::size_t j = 0; j < K; ++j) {
        double beta = double(j) / double(K);
        std::complex<double> u = u_sum(beta, N);
        std::uint64_t r = (N % K) * j % K;
        acc.add(u * u * u * std::polar(1.0, -2.0 * std::numbers::pi * double(r) / double(K)));
    }
    return acc.value() / double(K);
}

MajorArcIntegral major_arc_integral(const std::vector<double>& values,
                                    const ArcSystem& sys, int M,
                                    const CoeffTable& coeffs,
                                    std::size_t nodes_per_arc, int threads) {
    if (nodes_per_arc < 64) throw std::invalid_argument("major_arc_integral: need >= 64 nodes per arc");
    const std::uint64_t N = sys.N();
    if (N + 1 > values.size()) throw std::out_of_range("major_arc_integral: values too short");
    auto arcs = sys.major_arcs();
    std::size_t n_sub = nodes_per_arc % 2 == 0 ? nodes_per_arc : nodes_per_arc + 1;

    std::vector<std::complex<double>> vals(arcs.size()), models(arcs.size());
    parallel_for(arcs.size(), [&](std::size_t ai) {
        const auto& arc = arcs[ai];
        const double frak = frak_f_impl(arc.q, double(N), M, coeffs) / double(N);
        const double h = (arc.hi - arc.lo) / double(n_sub);
        KahanComplexSum acc, macc;
        for (std::size_t i = 0; i <= n_sub; ++i) {
            const double alpha = arc.lo + h * double(i);
            const double wt = (i == 0 || i == n_sub) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
            const std::complex<double> F = exp_sum(values, alpha, N);
            const std::complex<double> ph =
                std::polar(1.0, -2.0 * std::numbers::pi * double(N) * alpha);
            acc.add(wt * F * F * F * ph);
            const std::complex<double> u = u_sum(alpha - double(arc.a) / double(arc.q), N);
            macc.add(wt * (frak * frak * frak) * u * u * u * ph);
        }
        vals[ai] = acc.value() * (h / 3.0);
        models[ai] = macc.value() * (h / 3.0);
    }, threads);

    KahanComplexSum total, mtotal;
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        total.add(vals[i]);
        mtotal.add(models[i]);
    }
    return {total.value(), mtotal.value()};
}

double predict_r(const FactorTable& t, std::uint64_t N, int M, std::uint64_t Q,
                 const CoeffTable& coeffs) {
    auto ss = singular_series(t, N, M, Q, coeffs);
    return ss.partial * double(N) * double(N) / 2.0;
}

}  // namespace omegasum
