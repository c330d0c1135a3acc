#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fulleroct/graph.hpp"
#include "fulleroct/moats.hpp"

namespace fulleroct {

/// Moat-packing certificate file:
///   {"graph_sha256": hex, "refined": bool, "moats": [{"core": [ids], "width": k}]}
/// The hash is taken over the planar_code encoding (with header) of the graph
/// the certificate was written for, which may be a fullerene or a
/// triangulation. With "refined" the cores are vertex ids of the refinement of
/// the triangulation; otherwise of the triangulation itself.
struct Certificate {
    std::string graph_sha256;
    bool refined = true;
    std::vector<MoatSpec> moats;
};

class CertificateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Certificate parse_certificate(std::string_view json_text);
std::string write_certificate(const Certificate& cert);

/// Lowercase hex SHA-256 of write_planar_code({g}).
std::string graph_sha256(const EmbeddedGraph& g);

/// Triangulation a certificate refers to: the dual of a fullerene, or the
/// input itself when it is already a triangulation. Terminals are its
/// odd-degree vertices.
struct CertificateHost {
    EmbeddedGraph triangulation;
    std::vector<Vertex> terminals;
};

CertificateHost certificate_host(const EmbeddedGraph& input);

struct CertificateCheck {
    Rational value;
    std::optional<int> tau;  // absent when the terminal set is too large to solve
    bool bounded = false;    // value <= tau
    MoatPacking packing;
};

/// Throws CertificateError on a hash mismatch and PackingError when the
/// packing is invalid.
CertificateCheck check_certificate(const EmbeddedGraph& input, const Certificate& cert);

/// Disk certificate from greedy_packing on the refinement.
Certificate greedy_certificate(const EmbeddedGraph& input);

}  // namespace fulleroct
