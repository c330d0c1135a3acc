// fulleroct: batch analysis of fullerene graphs.
//
// Exit codes: 0 ok, 1 a proved bound came out violated, 2 unreadable or
// invalid input, 3 certificate rejected.

#include <algorithm>
#include <condition_variable>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fulleroct/certificate.hpp"
#include "fulleroct/codec.hpp"
#include "fulleroct/goldberg.hpp"
#include "fulleroct/moats.hpp"
#include "fulleroct/report.hpp"
#include "fulleroct/spectra.hpp"

using namespace fulleroct;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_violated = 1;
constexpr int exit_input = 2;
constexpr int exit_rejected = 3;

std::vector<EmbeddedGraph> load_graphs(const std::string& path, const std::string& format) {
    const auto bytes = read_file(path);
    if (format == "adjlist") return parse_adjlist(std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
    return parse_planar_code(bytes);
}

std::string read_text(const std::string& path) {
    const auto bytes = read_file(path);
    return std::string(bytes.begin(), bytes.end());
}

int default_jobs() {
    if (const char* env = std::getenv("FULLEROCT_JOBS")) {
        try {
            return std::max(1, std::stoi(env));
        } catch (const std::exception&) {
            std::cerr << "ignoring FULLEROCT_JOBS=" << env << "\n";
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty() && path != "-") {
            file_.open(path, std::ios::binary);
            if (!file_) throw std::runtime_error("cannot open " + path + " for writing");
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

// Runs work(i) for i < count on a pool and hands results to emit(i, result)
// in index order.
template <typename Result, typename Work, typename Emit>
void ordered_pool(int count, int jobs, Work work, Emit emit) {
    std::vector<std::optional<Result>> results(count);
    std::mutex mutex;
    std::condition_variable ready;
    int next = 0;

    auto worker = [&] {
        for (;;) {
            int i;
            {
                std::lock_guard lock(mutex);
                if (next >= count) return;
                i = next++;
            }
            Result r = work(i);
            {
                std::lock_guard lock(mutex);
                results[i] = std::move(r);
            }
            ready.notify_all();
        }
    };
    std::vector<std::jthread> threads;
    for (int t = 0; t < std::min(jobs, count); ++t) threads.emplace_back(worker);

    for (int i = 0; i < count; ++i) {
        std::unique_lock lock(mutex);
        ready.wait(lock, [&] { return results[i].has_value(); });
        Result r = std::move(*results[i]);
        results[i].reset();
        lock.unlock();
        emit(i, r);
    }
}

int cmd_analyze(const std::string& input, const std::string& format, const std::string& output,
                const AnalysisOptions& options, int jobs) {
    std::vector<EmbeddedGraph> graphs;
    try {
        graphs = load_graphs(input, format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    }

    Output out(output);
    bool violated = false, invalid = false;
    ordered_pool<nlohmann::ordered_json>(
        static_cast<int>(graphs.size()), jobs,
        [&](int i) {
            try {
                return analyze_graph(graphs[i], i, options);
            } catch (const std::exception& e) {
                nlohmann::ordered_json r;
                for (const auto& key : report_keys()) r[key] = nullptr;
                r["index"] = i;
                r["n"] = graphs[i].vertex_count();
                r["m"] = graphs[i].edge_count();
                r["error"] = e.what();
                return r;
            }
        },
        [&](int, const nlohmann::ordered_json& record) {
            out.stream() << record.dump() << "\n";
            if (!record["error"].is_null()) invalid = true;
            if (has_violation(record)) violated = true;
        });
    out.stream().flush();
    if (violated) return exit_violated;
    return invalid ? exit_input : exit_ok;
}

int cmd_goldberg(int k, const std::string& output, bool dual_only) {
    if (k < 1) {
        std::cerr << "error: --k must be positive\n";
        return exit_input;
    }
    const EmbeddedGraph g = dual_only ? icosahedral_dual(k).graph() : icosahedral_fullerene(k).graph();
    const auto bytes = write_planar_code(std::span<const EmbeddedGraph>(&g, 1));
    if (output.empty() || output == "-") {
        std::cout.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
        std::cout.flush();
    } else {
        write_file(output, bytes);
    }
    return exit_ok;
}

int cmd_certificate(const std::string& graph_path, const std::string& format, const std::string& cert_path,
                    bool greedy, const std::string& output) {
    std::vector<EmbeddedGraph> graphs;
    try {
        graphs = load_graphs(graph_path, format);
        if (graphs.empty()) throw std::runtime_error("no graph in " + graph_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    }
    const EmbeddedGraph& g = graphs.front();

    if (greedy) {
        const std::string text = write_certificate(greedy_certificate(g));
        if (output.empty() || output == "-") std::cout << text;
        else write_file(output, std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
        return exit_ok;
    }
    if (cert_path.empty()) {
        std::cerr << "error: give --cert to verify or --greedy to generate\n";
        return exit_input;
    }

    Certificate cert;
    try {
        cert = parse_certificate(read_text(cert_path));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    }
    try {
        const CertificateCheck check = check_certificate(g, cert);
        std::cout << "value " << check.value.numerator() << "/" << check.value.denominator() << "\n";
        if (!check.tau) {
            std::cout << "tau unknown (too many terminals)\n";
            return exit_ok;
        }
        std::cout << "tau " << *check.tau << "\n";
        std::cout << "≤ tau: " << (check.bounded ? "yes" : "no") << "\n";
        return check.bounded ? exit_ok : exit_violated;
    } catch (const PackingError& e) {
        std::cerr << "rejected: " << to_string(e.kind()) << ": " << e.what() << "\n";
        return exit_rejected;
    } catch (const MoatError& e) {
        std::cerr << "rejected: " << e.what() << "\n";
        return exit_rejected;
    } catch (const CertificateError& e) {
        std::cerr << "rejected: " << e.what() << "\n";
        return exit_rejected;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    }
}

int cmd_spectra(const std::string& input, const std::string& format, const std::string& output, double tol,
                int jobs) {
    std::vector<EmbeddedGraph> graphs;
    try {
        graphs = load_graphs(input, format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    }
    Output out(output);
    bool failed = false;
    ordered_pool<nlohmann::ordered_json>(
        static_cast<int>(graphs.size()), jobs,
        [&](int i) {
            nlohmann::ordered_json r;
            r["index"] = i;
            r["n"] = graphs[i].vertex_count();
            try {
                const Spectrum a = adjacency_spectrum(graphs[i], tol);
                const Spectrum l = laplacian_spectrum(graphs[i], tol);
                r["adjacency"] = a.eigenvalues;
                r["laplacian"] = l.eigenvalues;
                r["lambda_min"] = a.min();
                r["residual"] = std::max(a.residual, l.residual);
                r["error"] = nullptr;
            } catch (const std::exception& e) {
                r["adjacency"] = r["laplacian"] = r["lambda_min"] = r["residual"] = nullptr;
                r["error"] = e.what();
            }
            return r;
        },
        [&](int, const nlohmann::ordered_json& record) {
            out.stream() << record.dump() << "\n";
            if (!record["error"].is_null()) failed = true;
        });
    return failed ? exit_input : exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Odd cycle transversals, moat certificates and spectral bounds for fullerene graphs"};
    app.require_subcommand(1);

    std::string input, format = "planar_code", output, cert_path;
    double eig_tol = default_eig_tolerance;
    int jobs = default_jobs();
    bool spectra = false, timings = false;
    const std::vector<std::string> formats = {"planar_code", "adjlist"};

    auto* analyze = app.add_subcommand("analyze", "Analyse every graph in a file; one JSON object per line");
    analyze->add_option("--input,-i", input, "input file")->required();
    analyze->add_option("--format", format, "planar_code or adjlist")->check(CLI::IsMember(formats));
    analyze->add_option("--output,-o", output, "report file (default stdout)");
    analyze->add_flag("--spectra", spectra, "include spectral checks");
    analyze->add_option("--certificate", cert_path, "moat certificate to check against matching graphs");
    analyze->add_option("--eig-tol", eig_tol, "eigenvalue sign tolerance")->check(CLI::PositiveNumber);
    analyze->add_option("--jobs,-j", jobs, "worker threads (default FULLEROCT_JOBS or core count)")
        ->check(CLI::PositiveNumber);
    analyze->add_flag("--timings", timings, "add per-stage timings to each record");

    int k = 1;
    bool dual_only = false;
    auto* goldberg = app.add_subcommand("goldberg", "Write the icosahedral fullerene on 60k^2 vertices");
    goldberg->add_option("--k", k, "Goldberg parameter")->required();
    goldberg->add_option("--output,-o", output, "planar_code file (default stdout)");
    goldberg->add_flag("--dual", dual_only, "write the dual triangulation instead");

    std::string graph_path;
    bool verify = false, greedy = false;
    auto* certificate = app.add_subcommand("certificate", "Verify or generate a moat-packing certificate");
    certificate->add_option("--graph,-g", graph_path, "graph file (first graph is used)")->required();
    certificate->add_option("--format", format, "planar_code or adjlist")->check(CLI::IsMember(formats));
    certificate->add_option("--cert,-c", cert_path, "certificate JSON");
    certificate->add_flag("--verify", verify, "verify the certificate (default when --cert is given)");
    certificate->add_flag("--greedy", greedy, "write a greedy disk certificate");
    certificate->add_option("--output,-o", output, "where --greedy writes (default stdout)");

    auto* spectra_cmd = app.add_subcommand("spectra", "Adjacency and Laplacian spectra as JSON lines");
    spectra_cmd->add_option("--input,-i", input, "input file")->required();
    spectra_cmd->add_option("--format", format, "planar_code or adjlist")->check(CLI::IsMember(formats));
    spectra_cmd->add_option("--output,-o", output, "output file (default stdout)");
    spectra_cmd->add_option("--eig-tol", eig_tol, "eigenvalue sign tolerance")->check(CLI::PositiveNumber);
    spectra_cmd->add_option("--jobs,-j", jobs, "worker threads")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_input;
    }

    try {
        if (*analyze) {
            AnalysisOptions options;
            options.spectra = spectra;
            options.eig_tolerance = eig_tol;
            options.timings = timings;
            if (!cert_path.empty()) {
                try {
                    options.certificate = parse_certificate(read_text(cert_path));
                } catch (const std::exception& e) {
                    std::cerr << "error: " << e.what() << "\n";
                    return exit_input;
                }
            }
            return cmd_analyze(input, format, output, options, jobs);
        }
        if (*goldberg) return cmd_goldberg(k, output, dual_only);
        if (*certificate) {
            if (verify && greedy) {
                std::cerr << "error: --verify and --greedy are exclusive\n";
                return exit_input;
            }
            return cmd_certificate(graph_path, format, cert_path, greedy, output);
        }
        if (*spectra_cmd) return cmd_spectra(input, format, output, eig_tol, jobs);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    }
    return exit_ok;
}
