#include "envelope.hpp"

#include <atomic>
#include <exception>
#include <stdexcept>
#include <thread>
#include <vector>

#include "gegchain/chain.hpp"
#include "gegchain/dieudonne.hpp"
#include "gegchain/gegenbauer.hpp"
#include "gegchain/metrics.hpp"
#include "gegchain/positivity.hpp"

namespace gegchain::cli {

namespace {

Envelope make_envelope(const std::string& command, Envelope params, Envelope provenance,
                       Envelope columns, Envelope payload) {
    return Envelope{{"command", command},
                    {"format_version", format_version},
                    {"index_base", 0},
                    {"params", std::move(params)},
                    {"provenance", std::move(provenance)},
                    {"payload_columns", std::move(columns)},
                    {"payload", std::move(payload)}};
}

Envelope matrix_triples(const Matrix& m) {
    Envelope rows = Envelope::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0.0)
                rows.push_back(Envelope{{"row", i}, {"col", j}, {"value", m(i, j)}});
    return rows;
}

Pseudometric pseudometric_by_name(const std::string& object, std::size_t n,
                                  const GegenbauerParam& p) {
    if (object == "theta0") return theta0(n, p);
    if (object == "p1") return p1(n, p);
    if (object == "p2") return p2(n, p);
    if (object == "plongrange") {
        if (n == 4) return p_longrange_n4(p);
        if (n == 8) return p_longrange_n8(p);
        throw std::invalid_argument("plongrange: closed/pinned forms exist for n = 4 or n = 8");
    }
    throw std::invalid_argument("unknown pseudometric selector '" + object +
                                "' (valid: theta0, p1, p2, plongrange)");
}

} // namespace

Envelope cmd_table1(std::size_t n_max, double a, double tol, int jobs) {
    if (n_max < 1) throw std::invalid_argument("table1: n_max must be >= 1");
    const GegenbauerParam p(a);

    auto make_row = [&](std::size_t n) -> Envelope {
        Envelope row{{"N", n}};
        if (n == 1) {
            // a 1x1 metric stays positive for every coupling
            row["G"] = "inf";
            row["G_prime"] = nullptr;
            row["G_double_prime"] = nullptr;
            return row;
        }
        const PositivityRecord rec = positivity_record(n, p, tol);
        auto put = [&](const char* key, const std::optional<double>& v) {
            if (v)
                row[key] = *v;
            else
                row[key] = nullptr;
        };
        put("G", rec.g_boundary);
        put("G_prime", rec.g_prime);
        put("G_double_prime", rec.g_double_prime);
        return row;
    };

    std::vector<Envelope> rows(n_max);
    int workers = jobs > 0 ? jobs : static_cast<int>(std::thread::hardware_concurrency());
    workers = std::max(1, std::min<int>(workers, static_cast<int>(n_max)));

    std::atomic<std::size_t> next{1};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    auto drain = [&] {
        for (;;) {
            const std::size_t n = next.fetch_add(1);
            if (n > n_max || failed.load()) return;
            try {
                rows[n - 1] = make_row(n);
            } catch (...) {
                failed.store(true);
                failure = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(drain);
    drain();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);

    return make_envelope(
        "table1", {{"n_max", n_max}, {"a", a}, {"tol", tol}},
        {{"payload", "positivity boundaries G, G', G'' of the tridiagonal metric family "
                     "theta0 + g*p1 against the level count N"}},
        Envelope::array({"N", "G", "G_prime", "G_double_prime"}), rows);
}

Envelope cmd_fig1(std::size_t samples, double g_min, double g_max, std::size_t n, double a) {
    if (samples < 2) throw std::invalid_argument("fig1: samples must be >= 2");
    const GegenbauerParam p(a);
    const EigenCurve curve = eigencurves(n, p, g_min, g_max, samples);

    Envelope columns = Envelope::array({"g"});
    for (std::size_t k = 1; k <= n; ++k) columns.push_back("p" + std::to_string(k));

    Envelope rows = Envelope::array();
    for (std::size_t s = 0; s < curve.g_samples.size(); ++s) {
        Envelope row{{"g", curve.g_samples[s]}};
        for (std::size_t k = 0; k < n; ++k)
            row["p" + std::to_string(k + 1)] = curve.eigenvalue_tracks[s][k];
        rows.push_back(std::move(row));
    }
    return make_envelope(
        "fig1",
        {{"samples", samples}, {"g_min", g_min}, {"g_max", g_max}, {"n", n}, {"a", a}},
        {{"payload", "sorted eigenvalue tracks of the metric theta0 + g*p1 over a coupling grid"}},
        std::move(columns), std::move(rows));
}

Envelope cmd_dump(const std::string& object, std::size_t n, double a) {
    const GegenbauerParam p(a);
    Envelope params{{"object", object}, {"n", n}, {"a", a}};

    if (object == "zeros") {
        const SpectralData spec = gegenbauer_zeros(n, p);
        Envelope rows = Envelope::array();
        for (std::size_t i = 0; i < spec.energies.size(); ++i)
            rows.push_back(Envelope{{"index", i}, {"energy", spec.energies[i]}});
        return make_envelope("dump", std::move(params),
                             {{"payload", "chain energies: ascending zeros of the degree-N "
                                          "Gegenbauer polynomial"}},
                             Envelope::array({"index", "energy"}), std::move(rows));
    }

    Matrix m;
    std::string what;
    if (object == "hamiltonian") {
        m = build_hamiltonian(n, p).dense();
        what = "non-Hermitian tridiagonal chain Hamiltonian";
    } else if (object == "partner") {
        m = build_hermitian_partner(n, p).symmetric().dense();
        what = "isospectral symmetric tridiagonal partner";
    } else if (object == "theta0" || object == "p1" || object == "p2" ||
               object == "plongrange") {
        m = pseudometric_by_name(object, n, p).dense();
        what = "banded pseudometric solving H^T P = P H";
    } else {
        throw std::invalid_argument(
            "unknown dump selector '" + object +
            "' (valid: hamiltonian, theta0, p1, p2, plongrange, partner, zeros)");
    }
    return make_envelope("dump", std::move(params), {{"payload", what}},
                         Envelope::array({"row", "col", "value"}), matrix_triples(m));
}

Envelope cmd_residual(const std::string& object, std::size_t n, double a) {
    const GegenbauerParam p(a);
    const Pseudometric pm = pseudometric_by_name(object, n, p);
    const ChainHamiltonian h = build_hamiltonian(pm.n_levels, p);
    const double r = residual(h, pm);
    return make_envelope("residual", {{"object", object}, {"n", pm.n_levels}, {"a", a}},
                         {{"payload", "relative intertwining residual "
                                      "|H^T P - P H| / (|H| |P|), infinity norms"}},
                         Envelope::array({"object", "residual"}),
                         Envelope::array({Envelope{{"object", object}, {"residual", r}}}));
}

Envelope cmd_boundary(std::size_t n, double a, int max_negatives, double tol) {
    const GegenbauerParam p(a);
    const double g = boundary(n, p, max_negatives, tol);
    return make_envelope(
        "boundary",
        {{"n", n}, {"a", a}, {"max_negatives", max_negatives}, {"tol", tol}},
        {{"payload", "smallest g at which the negative-eigenvalue count of theta0 + g*p1 "
                     "exceeds max_negatives"}},
        Envelope::array({"N", "a", "max_negatives", "g"}),
        Envelope::array({Envelope{
            {"N", n}, {"a", a}, {"max_negatives", max_negatives}, {"g", g}}}));
}

std::string to_csv(const Envelope& env) {
    auto quote = [](std::string s) {
        if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
        std::string out = "\"";
        for (char c : s) {
            if (c == '"') out += '"';
            out += c;
        }
        out += '"';
        return out;
    };
    auto cell = [&](const Envelope& v) -> std::string {
        if (v.is_null()) return "";
        if (v.is_string()) return quote(v.get<std::string>());
        return v.dump();
    };

    std::string out;
    const Envelope& columns = env.at("payload_columns");
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (c) out += ',';
        out += quote(columns[c].get<std::string>());
    }
    out += '\n';
    for (const Envelope& row : env.at("payload")) {
        for (std::size_t c = 0; c < columns.size(); ++c) {
            if (c) out += ',';
            const std::string key = columns[c].get<std::string>();
            out += row.contains(key) ? cell(row.at(key)) : "";
        }
        out += '\n';
    }
    return out;
}

} // namespace gegchain::cli
