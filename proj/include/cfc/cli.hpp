#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "cfc/classifier.hpp"
#include "cfc/graph.hpp"

namespace cfc::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kError = 1;        // also "verification failed"
inline constexpr int kUnsupported = 2;  // shape outside the closed forms

/// Entry point of the `cfc` tool. Subcommands: analyze, tree, solve, verify,
/// gen, batch.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);
/// Same, with `args` excluding the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Reads a graph from a file ("-" for stdin). format: edgelist, graph6 or
/// auto (graph6 when the first line is a single printable token).
ParsedGraph read_graph(const std::string& path, const std::string& format);

nlohmann::json to_json(const CfcResult& r);

/// The analyze report: {"n","m","diameter","radius","h","cfc":{lo,hi,method,notes},
/// "vcfc":{...},"certificate":[[u,v,c],...],"vertex_certificate":[[v,c],...]}.
nlohmann::json analysis_json(const Graph& g, const std::vector<long long>& labels, bool resolve,
                             bool with_certificate);

}  // namespace cfc::cli
