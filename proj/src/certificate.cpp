#include "fulleroct/certificate.hpp"

#include <algorithm>
#include <cstdio>

#include <openssl/evp.h>

#include <json.hpp>

#include "fulleroct/codec.hpp"
#include "fulleroct/refine.hpp"
#include "fulleroct/tjoin.hpp"

namespace fulleroct {

using nlohmann::json;

Certificate parse_certificate(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw CertificateError(std::string("certificate is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw CertificateError("certificate must be a JSON object");

    Certificate cert;
    try {
        cert.graph_sha256 = doc.at("graph_sha256").get<std::string>();
        cert.refined = doc.value("refined", true);
        for (const json& m : doc.at("moats")) {
            MoatSpec spec;
            spec.core = m.at("core").get<std::vector<Vertex>>();
            spec.width = m.at("width").get<int>();
            cert.moats.push_back(std::move(spec));
        }
    } catch (const json::exception& e) {
        throw CertificateError(std::string("malformed certificate: ") + e.what());
    }
    return cert;
}

std::string write_certificate(const Certificate& cert) {
    json moats = json::array();
    for (const MoatSpec& m : cert.moats) moats.push_back({{"core", m.core}, {"width", m.width}});
    json doc = {{"graph_sha256", cert.graph_sha256}, {"refined", cert.refined}, {"moats", moats}};
    return doc.dump(2) + "\n";
}

std::string graph_sha256(const EmbeddedGraph& g) {
    const auto bytes = write_planar_code(std::span<const EmbeddedGraph>(&g, 1));
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    if (!EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr))
        throw std::runtime_error("SHA-256 computation failed");
    std::string hex;
    char buf[3];
    for (unsigned int i = 0; i < length; ++i) {
        std::snprintf(buf, sizeof buf, "%02x", digest[i]);
        hex += buf;
    }
    return hex;
}

CertificateHost certificate_host(const EmbeddedGraph& input) {
    const bool cubic = std::all_of(input.rotations().begin(), input.rotations().end(),
                                   [](const auto& r) { return r.size() == 3; });
    if (cubic && input.vertex_count() > 4) {
        const FullereneDual d = dual(validate_fullerene(input));
        return {d.triangulation.graph(), d.triangulation.terminals()};
    }
    if (!is_plane_triangulation(input)) throw CertificateError("graph is neither a fullerene nor a triangulation");
    return {input, odd_degree_vertices(input)};
}

CertificateCheck check_certificate(const EmbeddedGraph& input, const Certificate& cert) {
    const std::string hash = graph_sha256(input);
    if (hash != cert.graph_sha256)
        throw CertificateError("certificate was written for graph " + cert.graph_sha256 + ", not " + hash);
    const CertificateHost host = certificate_host(input);

    CertificateCheck out;
    if (cert.refined) {
        const RefinedTriangulation rt = refine(host.triangulation);
        out.packing = make_packing(rt.graph, rt.terminals, cert.moats);
        out.value = verify_packing(rt.graph, out.packing, PackingOptions{true, false});
    } else {
        out.packing = make_packing(host.triangulation, host.terminals, cert.moats);
        out.value = verify_packing(host.triangulation, out.packing, PackingOptions{false, false});
    }
    if (static_cast<int>(host.terminals.size()) <= max_enumerated_terminals) {
        out.tau = min_tjoin(host.triangulation, host.terminals).value();
        out.bounded = out.value <= Rational(*out.tau);
    }
    return out;
}

Certificate greedy_certificate(const EmbeddedGraph& input) {
    const CertificateHost host = certificate_host(input);
    const MoatPacking packing = greedy_packing(refine(host.triangulation));
    Certificate cert;
    cert.graph_sha256 = graph_sha256(input);
    cert.refined = true;
    for (const Moat& m : packing.family) cert.moats.push_back({m.core, m.width});
    return cert;
}

}  // namespace fulleroct
