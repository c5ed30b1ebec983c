#include "hlindex/report.hpp"

#include <cmath>
#include <cstdio>

#include "hlindex/io.hpp"

namespace hlindex {

using nlohmann::json;

json to_json(const Spectrum& s) { return json{{"n", s.order()}, {"values", s.values}}; }

json to_json(const HLResult& r) {
  return json{{"H", r.H}, {"L", r.L}, {"lambda_H", r.lambda_H}, {"lambda_L", r.lambda_L}, {"R", r.R}};
}

json to_json(const InterlacingReport& r) {
  return json{{"pass", r.pass},
              {"worst_margin", r.worst_margin},
              {"worst_index", r.worst_index},
              {"worst_relation", r.worst_relation}};
}

json to_json(const Inequality& q) {
  return json{{"name", q.name}, {"lhs", q.lhs}, {"rhs", q.rhs}, {"margin", q.margin()}, {"holds", q.holds}};
}

namespace {

json inequalities(const std::vector<Inequality>& list) {
  json out = json::array();
  for (const auto& q : list) out.push_back(to_json(q));
  return out;
}

json optional_number(const std::optional<double>& x) { return x ? json(*x) : json(nullptr); }

}  // namespace

json to_json(const BoundReport& r) {
  json readings = json::array();
  for (const auto& d : r.readings) {
    readings.push_back(json{{"name", d.name},
                            {"d", d.d},
                            {"sqrt_d_bound", d.sqrt_d_bound},
                            {"sqrt_d_holds", d.sqrt_d_holds},
                            {"refined_bound", d.refined_bound},
                            {"refined_degenerate", d.refined_degenerate},
                            {"refined_holds", d.refined_holds},
                            {"degree_sum", to_json(d.degree_sum)},
                            {"refined_step", to_json(d.refined_step)}});
  }
  return json{{"n", r.n},
              {"m", r.m},
              {"max_degree", r.max_degree},
              {"trace_sum", r.trace_sum},
              {"square_sum", r.square_sum},
              {"hl", to_json(r.hl)},
              {"branch", r.branch},
              {"split_index", r.split_index},
              {"C_set", r.c_set},
              {"D_set", r.d_set},
              {"chain", inequalities(r.chain)},
              {"modified_chain", inequalities(r.modified_chain)},
              {"chain_holds", r.chain_holds},
              {"readings", readings},
              {"sqrt_max_degree", r.sqrt_max_degree},
              {"max_degree_bound_holds", r.max_degree_bound_holds}};
}

json to_json(const WindowReport& r) {
  return json{{"n", r.n},
              {"H", r.H},
              {"L", r.L},
              {"lambda_H_minus_1", optional_number(r.lambda_H_minus_1)},
              {"lambda_H_plus_1", optional_number(r.lambda_H_plus_1)},
              {"max_halfwidth", r.max_halfwidth},
              {"required_halfwidth", r.required_halfwidth},
              {"paper_delta_ok", r.paper_delta_ok}};
}

json to_json(const BallPackingReport& r) {
  return json{{"radius", r.radius},       {"threshold", r.threshold},   {"centers", r.centers},
              {"ball_sizes", r.ball_sizes}, {"ball_radii", r.ball_radii}, {"packed", r.packed},
              {"qualifying", r.qualifying}, {"direct", r.direct},         {"holds", r.holds}};
}

json to_json(const ConversePackingReport& r) {
  return json{{"hypothesis_ok", r.hypothesis_ok},
              {"pieces", r.pieces},
              {"piece_kinds", r.piece_kinds},
              {"packed", r.packed},
              {"direct_ge_sqrt3", r.direct_ge_sqrt3},
              {"target", r.target},
              {"holds", r.holds}};
}

json to_json(const ExtremalReport& r) {
  return json{{"degree", r.degree},
              {"n", r.n},
              {"best_graph6", encode_graph6(r.best)},
              {"best_R", r.best_R},
              {"trajectory", r.trajectory},
              {"restarts", r.restarts},
              {"accepted_moves", r.accepted_moves}};
}

json to_json(const ConjectureScanReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back(json{{"n", row.n},
                        {"graphs", row.graphs},
                        {"planar", row.planar},
                        {"max_R", row.max_R},
                        {"argmax_graph6", row.argmax}});
  }
  json flagged = json::array();
  for (const auto& f : r.flagged) flagged.push_back(json{{"graph6", f.graph6}, {"R", f.R}});
  return json{{"n_max", r.n_max}, {"flag_threshold", r.flag_threshold}, {"rows", rows},
              {"flagged", flagged}, {"k4_seen", r.k4_seen},             {"k4_R", r.k4_R}};
}

json to_json(const CertificateCheck& c) {
  return json{{"accepted", c.accepted},
              {"failures", c.failures},
              {"a_size", c.a_size},
              {"b_size", c.b_size},
              {"H", c.H},
              {"k", c.k},
              {"upper", c.upper},
              {"lower", c.lower},
              {"upper_margin", c.upper_margin},
              {"lower_margin", c.lower_margin},
              {"upper_outcome", to_string(c.upper_outcome)},
              {"lower_outcome", to_string(c.lower_outcome)}};
}

json to_json(const Certificate& c) {
  return json{{"partition", c.partition.to_string()},
              {"big_side", std::string(1, to_char(c.big_side))},
              {"k", c.k},
              {"exceptional", c.exceptional}};
}

namespace {

void write(const json& j, int indent, int depth, std::string& out) {
  const std::string pad = indent > 0 ? std::string(static_cast<std::size_t>(indent) * (depth + 1), ' ') : "";
  const std::string close_pad = indent > 0 ? std::string(static_cast<std::size_t>(indent) * depth, ' ') : "";
  const char* nl = indent > 0 ? "\n" : "";
  const char* colon = indent > 0 ? ": " : ":";
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{";
      out += nl;
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) {
          out += ",";
          out += nl;
        }
        first = false;
        out += pad + json(it.key()).dump() + colon;
        write(it.value(), indent, depth + 1, out);
      }
      out += nl + close_pad + "}";
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[";
      out += nl;
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) {
          out += ",";
          out += nl;
        }
        out += pad;
        write(j[i], indent, depth + 1, out);
      }
      out += nl + close_pad + "]";
      return;
    }
    case json::value_t::number_float: {
      const double x = j.get<double>();
      if (!std::isfinite(x)) {
        out += "null";
        return;
      }
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", x);
      out += buf;
      return;
    }
    default:
      out += j.dump();
  }
}

}  // namespace

std::string dump_json(const json& j, int indent) {
  std::string out;
  write(j, indent, 0, out);
  out += '\n';
  return out;
}

}  // namespace hlindex
