#include "fulleroct/report.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include "fulleroct/transversal.hpp"

namespace fulleroct {

using nlohmann::ordered_json;

const std::vector<std::string>& report_keys() {
    static const std::vector<std::string> keys = {
        "index", "sha256", "n", "m", "error",
        "tau_odd", "tau_bound", "tau_check", "cui_wang_bound", "cui_wang", "hopkins_staton_bound",
        "hopkins_staton", "is_matching",
        "independent_set_size", "independence_bound", "independence_check", "exact_alpha", "heckman_thomas_bound",
        "heckman_thomas",
        "diameter", "diameter_bound", "diameter_check", "graffiti",
        "lambda_min", "lambda_min_bound", "lambda_min_check", "mu_max", "maxcut_bound", "maxcut", "closed_shell",
        "certificate_value", "certificate_bounded",
        "timings",
    };
    return keys;
}

namespace {

const char* verdict_le(double lhs, double rhs, double tolerance) {
    if (lhs < rhs - tolerance) return to_string(Verdict::Holds);
    if (lhs <= rhs + tolerance) return to_string(Verdict::Equality);
    return to_string(Verdict::Violated);
}

std::string rational_string(const Rational& r) {
    std::ostringstream out;
    out << r.numerator() << "/" << r.denominator();
    return out.str();
}

}  // namespace

ordered_json analyze_graph(const EmbeddedGraph& g, int index, const AnalysisOptions& options) {
    using clock = std::chrono::steady_clock;
    ordered_json r;
    for (const auto& key : report_keys()) r[key] = nullptr;
    r["index"] = index;
    r["sha256"] = graph_sha256(g);
    r["n"] = g.vertex_count();
    r["m"] = g.edge_count();

    ordered_json timings = ordered_json::object();
    auto lap = [&, last = clock::now()](const char* name) mutable {
        const auto now = clock::now();
        timings[name] = std::chrono::duration<double, std::milli>(now - last).count();
        last = now;
    };

    std::optional<FullereneGraph> f;
    try {
        f = validate_fullerene(g);
    } catch (const FullereneError& e) {
        r["error"] = std::string(to_string(e.kind())) + ": " + e.what();
        return r;
    }

    Transversal tr = odd_cycle_transversal(*f);
    lap("transversal_ms");
    const IndependentSetResult isr = independent_set(*f, tr);
    lap("independent_set_ms");
    const BoundsReport b = bounds_report(*f, tr, isr);
    lap("bounds_ms");

    r["tau_odd"] = b.tau;
    r["tau_bound"] = b.tau_bound;
    r["tau_check"] = to_string(b.tau_check);
    r["cui_wang_bound"] = b.cui_wang_bound;
    r["cui_wang"] = to_string(b.cui_wang);
    r["hopkins_staton_bound"] = b.hopkins_staton_bound;
    r["hopkins_staton"] = to_string(b.hopkins_staton);
    r["is_matching"] = tr.is_matching;
    r["independent_set_size"] = b.independent_set_size;
    r["independence_bound"] = b.independence_bound;
    r["independence_check"] = to_string(b.independence_check);
    if (b.exact_alpha) r["exact_alpha"] = *b.exact_alpha;
    r["heckman_thomas_bound"] = b.heckman_thomas_bound;
    r["heckman_thomas"] = to_string(b.heckman_thomas);
    r["diameter"] = b.diameter;
    r["diameter_bound"] = b.diameter_bound;
    r["diameter_check"] = to_string(b.diameter_check);
    r["graffiti"] = to_string(b.graffiti);
    r["lambda_min_bound"] = lambda_min_bound(b.n);

    if (options.spectra) {
        const double tol = options.eig_tolerance;
        const double lambda_min = adjacency_spectrum(g, tol).min();
        r["lambda_min"] = lambda_min;
        r["lambda_min_check"] = verdict_le(lambda_min, lambda_min_bound(b.n), tol);
        const MaxCutCheck cut = maxcut_spectral_check(*f, tr, tol);
        r["mu_max"] = cut.mu_max;
        r["maxcut_bound"] = cut.cut_upper;
        r["maxcut"] = cut.holds ? verdict_le(cut.cut_lower, cut.cut_upper, 1e-6) : to_string(Verdict::Violated);
        r["closed_shell"] = to_string(closed_shell_check(g, isr.vertices, tol).verdict);
        lap("spectra_ms");
    }

    if (options.certificate && options.certificate->graph_sha256 == r["sha256"].get<std::string>()) {
        const CertificateCheck check = check_certificate(g, *options.certificate);
        r["certificate_value"] = rational_string(check.value);
        if (check.tau) r["certificate_bounded"] = check.bounded;
        lap("certificate_ms");
    }

    if (options.timings) r["timings"] = timings;
    return r;
}

bool has_violation(const ordered_json& record) {
    const std::string violated = to_string(Verdict::Violated);
    for (const auto& [key, value] : record.items())
        if (value.is_string() && value.get<std::string>() == violated) return true;
    const auto bounded = record.find("certificate_bounded");
    return bounded != record.end() && bounded->is_boolean() && !bounded->get<bool>();
}

}  // namespace fulleroct
