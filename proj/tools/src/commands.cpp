// Copyright 2026 The qcjkls Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.hpp"

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "qcjkls/cache.hpp"
#include "qcjkls/diagram.hpp"
#include "qcjkls/error.hpp"
#include "qcjkls/invariant.hpp"
#include "qcjkls/limits.hpp"
#include "qcjkls/sequences.hpp"
#include "qcjkls/serialize.hpp"

namespace qcjkls::cli {

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string tuple(const std::vector<double>& xs) {
  std::string s = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + num(xs[i]);
  return s + ")";
}

std::string region_text(const Region& r) {
  if (const auto* p = std::get_if<FVector>(&r)) return tuple(p->coords);
  const Box& b = std::get<Box>(r);
  return "[" + tuple(b.lo.coords) + " .. " + tuple(b.hi.coords) + "]";
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

Cocycle load_cocycle(const RunConfig& cfg) {
  if (cfg.cocycle_file) return cocycle_from_json(load_json_file(*cfg.cocycle_file), cfg.cocycle_file->parent_path());
  if (cfg.quandle_file) {
    // A quandle alone gets the trivial cocycle; Z then counts colorings.
    auto q = std::make_shared<const QuandleTable>(quandle_from_json(load_json_file(*cfg.quandle_file)));
    return build_trivial_cocycle(std::move(q), std::make_shared<const AbelianGroup>(AbelianGroup::cyclic(1)));
  }
  return build_s4_cocycle();
}

RecordOptions record_options(const RunConfig& cfg) {
  RecordOptions opts;
  opts.enumeration = EnumerationOptions{cfg.budget, cfg.threads};
  opts.assume_crossing_number = cfg.assume_crossing_number;
  opts.prefer_affine = cfg.affine;
  return opts;
}

std::optional<ResultCache> open_cache(const RunConfig& cfg, const Cocycle& phi) {
  if (!cfg.cache_path) return std::nullopt;
  return std::optional<ResultCache>(std::in_place, *cfg.cache_path, phi.group_ptr());
}

// Why the crossing number is unavailable, or empty when it is known.
std::string crossing_refusal(const InvariantRecord& r, const BraidWord& w) {
  if (r.crossing_number) return {};
  try {
    crossing_number_reduced_alternating(w);
  } catch (const DomainError& e) {
    return e.what();
  }
  return "crossing number unavailable";
}

void print_quandle_table(std::ostream& out, const QuandleTable& q) {
  std::size_t width = 4;  // fits "*bar"
  for (const auto& l : q.labels()) width = std::max(width, l.size());
  const int w = static_cast<int>(width) + 1;
  auto table = [&](const char* symbol, auto op) {
    out << std::left << std::setw(w) << symbol << "|";
    for (Element b = 0; b < q.size(); ++b) out << ' ' << std::setw(w) << q.label(b);
    out << '\n' << std::string(static_cast<std::size_t>(w), '-') << '+'
        << std::string(q.size() * static_cast<std::size_t>(w + 1), '-') << '\n';
    for (Element a = 0; a < q.size(); ++a) {
      out << std::setw(w) << q.label(a) << "|";
      for (Element b = 0; b < q.size(); ++b) out << ' ' << std::setw(w) << q.label(op(a, b));
      out << '\n';
    }
  };
  table("*", [&](Element a, Element b) { return q.op(a, b); });
  out << '\n';
  table("*bar", [&](Element a, Element b) { return q.inv_op(a, b); });
  out << std::right;
}

}  // namespace

std::vector<std::uint32_t> IndexRange::values() const {
  std::vector<std::uint32_t> out;
  for (std::uint64_t n = first; n <= last; n += step) out.push_back(static_cast<std::uint32_t>(n));
  return out;
}

IndexRange parse_range(const std::string& text, std::uint32_t step) {
  auto parse_index = [&](const std::string& s, std::size_t pos) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 9)
      throw ParseError("invalid index '" + s + "' in range '" + text + "'", pos);
    return static_cast<std::uint32_t>(std::stoul(s));
  };
  IndexRange r;
  r.step = step;
  if (step == 0) throw ParseError("range step must be positive", 0);
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    r.first = r.last = parse_index(text, 0);
  } else {
    r.first = parse_index(text.substr(0, dots), 0);
    r.last = parse_index(text.substr(dots + 2), dots + 2);
  }
  if (r.first == 0) throw ParseError("range must start at 1 or later", 0);
  if (r.last < r.first) throw ParseError("empty range '" + text + "'", 0);
  return r;
}

int cmd_quandle_build(const RunConfig& cfg, Streams io, const std::string& kind, std::uint32_t modulus,
                      const std::string& poly) {
  QuandleTable q = kind == "s4" ? build_s4()
                                : build_alexander_quandle(AlexanderQuandleSpec{modulus, parse_polynomial(poly)});
  switch (cfg.format) {
    case Format::kJson: print_json(io.out, quandle_to_json(q)); break;
    case Format::kCsv:
      for (const auto& row : q.op_table().rows()) {
        for (std::size_t b = 0; b < row.size(); ++b) io.out << (b ? "," : "") << row[b];
        io.out << '\n';
      }
      break;
    case Format::kPretty:
      io.out << "quandle of order " << q.size() << ", hash " << q.content_hash() << "\n\n";
      print_quandle_table(io.out, q);
      break;
  }
  return kExitOk;
}

int cmd_quandle_check(const RunConfig& cfg, Streams io, const std::filesystem::path& file) {
  const RawQuandle raw = raw_quandle_from_json(load_json_file(file));
  AxiomReport report = verify_operation_table(raw.op);
  std::string inv_problem;
  if (report.valid() && raw.inv_op) {
    try {
      QuandleTable::from_tables(raw.op, *raw.inv_op, raw.labels);
    } catch (const Error& e) {
      inv_problem = e.what();
    }
  }
  const bool ok = report.valid() && inv_problem.empty();
  if (cfg.format == Format::kJson) {
    Json v = Json::array();
    for (const auto& x : report.violations)
      v.push_back(Json{{"axiom", to_string(x.axiom)}, {"a", x.a}, {"b", x.b}, {"c", x.c}});
    Json j{{"file", file.string()}, {"size", raw.op.size}, {"valid", ok}, {"violations", v}};
    if (!inv_problem.empty()) j["inv_op_error"] = inv_problem;
    print_json(io.out, j);
  } else if (cfg.format == Format::kCsv) {
    io.out << "axiom,a,b,c\n";
    for (const auto& x : report.violations) io.out << to_string(x.axiom) << ',' << x.a << ',' << x.b << ',' << x.c << '\n';
    if (!inv_problem.empty()) io.out << "inv_op,,," << '\n';
  } else {
    io.out << file.string() << ": " << (ok ? "valid quandle" : "NOT a quandle") << " (order " << raw.op.size << ")\n";
    for (const auto& x : report.violations)
      io.out << "  " << to_string(x.axiom) << " fails at (" << x.a << ", " << x.b << ", " << x.c << ")\n";
    if (!inv_problem.empty()) io.out << "  inv_op: " << inv_problem << '\n';
  }
  return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_cocycle_check(const RunConfig& cfg, Streams io, const std::optional<std::filesystem::path>& file) {
  RunConfig local = cfg;
  if (file) local.cocycle_file = file;
  const Cocycle phi = load_cocycle(local);
  const ViolationReport report = verify_cocycle(phi);
  const std::string name = local.cocycle_file ? local.cocycle_file->string() : std::string("built-in S4 cocycle");
  if (cfg.format == Format::kJson) {
    Json v = Json::array();
    for (const auto& x : report.violations)
      v.push_back(Json{{"condition", to_string(x.condition)}, {"a", x.a}, {"b", x.b}, {"c", x.c}});
    print_json(io.out, Json{{"cocycle", name}, {"hash", phi.content_hash()}, {"valid", report.valid()}, {"violations", v}});
  } else if (cfg.format == Format::kCsv) {
    io.out << "condition,a,b,c\n";
    for (const auto& x : report.violations)
      io.out << to_string(x.condition) << ',' << x.a << ',' << x.b << ',' << x.c << '\n';
  } else {
    io.out << name << ": " << (report.valid() ? "valid 2-cocycle" : "NOT a 2-cocycle") << " (quandle order "
           << phi.quandle().size() << ", group order " << phi.group().order() << ")\n";
    for (const auto& x : report.violations)
      io.out << "  " << to_string(x.condition) << " fails at (" << phi.quandle().label(x.a) << ", "
             << phi.quandle().label(x.b) << ", " << phi.quandle().label(x.c) << ")\n";
  }
  return report.valid() ? kExitOk : kExitVerificationFailed;
}

int cmd_invariant(const RunConfig& cfg, Streams io, const std::string& text) {
  const BraidWord w = parse_braid(text);
  const Cocycle phi = load_cocycle(cfg);
  auto cache = open_cache(cfg, phi);
  const InvariantRecord r = compute_invariant_cached(w, phi, record_options(cfg), cache ? &*cache : nullptr);
  const auto& labels = phi.group().labels();
  switch (cfg.format) {
    case Format::kJson: print_json(io.out, record_to_json(r)); break;
    case Format::kCsv: {
      io.out << "braid";
      for (const auto& l : labels) io.out << ",Z_" << l;
      io.out << ",colorings,crossings";
      for (const auto& l : labels) io.out << ",f_" << l;
      io.out << '\n' << csv_escape(r.braid);
      for (const auto& c : r.z.coeffs()) io.out << ',' << c;
      io.out << ',' << r.coloring_count << ',' << (r.crossing_number ? std::to_string(*r.crossing_number) : "");
      for (std::size_t i = 0; i < labels.size(); ++i) io.out << ',' << (r.f ? num(r.f->coords[i]) : "");
      io.out << '\n';
      break;
    }
    case Format::kPretty: {
      io.out << "braid      " << r.braid << '\n'
             << "Z          " << r.z.to_string() << '\n'
             << "colorings  " << r.coloring_count << '\n';
      if (r.crossing_number) {
        io.out << "crossings  " << *r.crossing_number << (cfg.assume_crossing_number ? " (assumed)" : "") << '\n'
               << "f          " << tuple(r.f->coords) << '\n';
      } else {
        io.out << "crossings  unknown: " << crossing_refusal(r, w) << '\n' << "f          not computed\n";
      }
      break;
    }
  }
  return kExitOk;
}

int cmd_colorings(const RunConfig& cfg, Streams io, const std::string& text, bool count_only) {
  const BraidWord w = parse_braid(text);
  const Cocycle phi = load_cocycle(cfg);
  const QuandleTable& q = phi.quandle();
  const auto& spec = q.alexander_spec();
  const EnumerationOptions opts{cfg.budget, cfg.threads};
  const bool affine = cfg.affine && spec;

  if (count_only) {
    const BigInt count = affine ? count_colorings_affine(w, *spec) : BigInt(enumerate_colorings(w, q, opts).size());
    if (cfg.format == Format::kJson)
      print_json(io.out, Json{{"braid", w.canonical()}, {"count", to_decimal(count)}});
    else
      io.out << count << '\n';
    return kExitOk;
  }
  const auto colorings = affine ? enumerate_colorings_affine(w, *spec, opts) : enumerate_colorings(w, q, opts);
  switch (cfg.format) {
    case Format::kJson: {
      Json list = Json::array();
      for (const auto& c : colorings) {
        Json row = Json::array();
        for (auto e : c) row.push_back(q.label(e));
        list.push_back(row);
      }
      print_json(io.out, Json{{"braid", w.canonical()}, {"count", colorings.size()}, {"colorings", list}});
      break;
    }
    case Format::kCsv:
      for (std::uint32_t i = 1; i <= w.strands(); ++i) io.out << (i > 1 ? "," : "") << "x" << i;
      io.out << '\n';
      for (const auto& c : colorings) {
        for (std::size_t i = 0; i < c.size(); ++i) io.out << (i ? "," : "") << csv_escape(q.label(c[i]));
        io.out << '\n';
      }
      break;
    case Format::kPretty:
      io.out << colorings.size() << " colorings of " << w.canonical() << '\n';
      for (const auto& c : colorings) {
        io.out << "  (";
        for (std::size_t i = 0; i < c.size(); ++i) io.out << (i ? ", " : "") << q.label(c[i]);
        io.out << ")\n";
      }
      break;
  }
  return kExitOk;
}

int cmd_family(const RunConfig& cfg, Streams io, const std::string& family, const IndexRange& range,
               std::uint32_t m, bool verify) {
  const FamilyId id = parse_family(family, m);
  const Cocycle phi = build_s4_cocycle();
  auto cache = verify ? open_cache(cfg, phi) : std::nullopt;
  RecordOptions opts = record_options(cfg);
  opts.assume_crossing_number.reset();  // verification checks the diagram itself

  struct Row {
    FamilyPoint point;
    std::string check;
  };
  std::vector<Row> rows;
  bool disagreement = false;
  for (const std::uint32_t n : range.values()) {
    Row row{family_point(id, n), "unverified"};
    if (verify) {
      if (tuple_space_size(4, row.point.braid.strands()) > cfg.budget) {
        row.check = "skipped";
      } else {
        const InvariantRecord r = compute_invariant_cached(row.point.braid, phi, opts, cache ? &*cache : nullptr);
        const bool agree = r.z == row.point.closed_z && r.crossing_number == row.point.closed_c &&
                           row.point.braid.size() == row.point.closed_c;
        row.check = agree ? "agree" : "differ";
        disagreement |= !agree;
      }
    }
    rows.push_back(std::move(row));
  }
  std::optional<LimitReport> limit;
  if (rows.size() >= 3) limit = family_limit_report(id, range.values(), cfg.tolerance);

  switch (cfg.format) {
    case Format::kJson: {
      Json points = Json::array();
      for (const auto& [p, check] : rows)
        points.push_back(Json{{"family", id.kind_name()}, {"m", id.m}, {"n", p.n}, {"braid", p.braid.canonical()},
                              {"strands", p.braid.strands()}, {"crossings", p.closed_c},
                              {"z", group_algebra_to_json(p.closed_z)}, {"f", p.closed_f.coords}, {"check", check}});
      print_json(io.out, Json{{"points", points}, {"limit", limit ? limit_report_to_json(*limit) : Json(nullptr)}});
      break;
    }
    case Format::kCsv:
      io.out << "family,m,n,strands,crossings,Z_1,Z_t,f_1,f_t,check\n";
      for (const auto& [p, check] : rows)
        io.out << id.kind_name() << ',' << id.m << ',' << p.n << ',' << p.braid.strands() << ',' << p.closed_c << ','
               << p.closed_z.coeff(0) << ',' << p.closed_z.coeff(1) << ',' << num(p.closed_f.coords[0]) << ','
               << num(p.closed_f.coords[1]) << ',' << check << '\n';
      if (limit)
        io.out << "# limit closed_form=" << (limit->closed_form ? region_text(*limit->closed_form) : "none")
               << " estimate=" << region_text(limit->estimate) << " converged=" << (limit->converged ? "true" : "false")
               << '\n';
      break;
    case Format::kPretty:
      io.out << std::left << std::setw(6) << "n" << std::setw(9) << "strands" << std::setw(11) << "crossings"
             << std::setw(40) << "Z" << std::setw(48) << "f" << "check\n";
      for (const auto& [p, check] : rows)
        io.out << std::setw(6) << p.n << std::setw(9) << p.braid.strands() << std::setw(11) << p.closed_c
               << std::setw(40) << p.closed_z.to_string() << std::setw(48) << tuple(p.closed_f.coords) << check
               << '\n';
      io.out << std::right;
      if (limit) {
        io.out << "\nlimit of " << id.to_string() << '\n'
               << "  closed form  " << (limit->closed_form ? region_text(*limit->closed_form) : "none") << '\n'
               << "  estimate     " << region_text(limit->estimate) << '\n'
               << "  converged    " << (limit->converged ? "yes" : "no") << " (max tail deviation "
               << num(limit->max_tail_deviation) << ", tolerance " << num(limit->tolerance) << ")\n";
      }
      break;
  }
  if (disagreement) io.err << "error: brute force and closed form disagree for " << id.to_string() << '\n';
  return disagreement ? kExitVerificationFailed : kExitOk;
}

int cmd_limits(const RunConfig& cfg, Streams io, const std::vector<std::string>& families, const IndexRange& range) {
  std::vector<LimitReport> reports;
  for (const auto& f : families) reports.push_back(family_limit_report(parse_family(f), range.values(), cfg.tolerance));
  const auto matrix = distinguish_limits(reports, cfg.tolerance);
  switch (cfg.format) {
    case Format::kJson: {
      Json list = Json::array(), m = Json::array();
      for (const auto& r : reports) list.push_back(limit_report_to_json(r));
      for (const auto& row : matrix) {
        Json jr = Json::array();
        for (auto s : row) jr.push_back(to_string(s));
        m.push_back(jr);
      }
      print_json(io.out, Json{{"reports", list}, {"separation", m}});
      break;
    }
    case Format::kCsv: {
      io.out << "family,converged,max_tail_deviation,estimate_lo_1,estimate_lo_t,estimate_hi_1,estimate_hi_t,"
                "limit_lo_1,limit_lo_t,limit_hi_1,limit_hi_t\n";
      auto box_cells = [](const Region& r) {
        const Box b = std::holds_alternative<Box>(r) ? std::get<Box>(r) : Box{std::get<FVector>(r), std::get<FVector>(r)};
        return num(b.lo.coords[0]) + ',' + num(b.lo.coords[1]) + ',' + num(b.hi.coords[0]) + ',' + num(b.hi.coords[1]);
      };
      for (const auto& r : reports)
        io.out << r.family->to_string() << ',' << (r.converged ? "true" : "false") << ',' << num(r.max_tail_deviation)
               << ',' << box_cells(r.estimate) << ',' << box_cells(limit_region(r)) << '\n';
      break;
    }
    case Format::kPretty: {
      for (const auto& r : reports)
        io.out << std::left << std::setw(12) << r.family->to_string() << std::right << "limit "
               << region_text(limit_region(r)) << (r.closed_form ? "" : " (numeric)")
               << ", converged " << (r.converged ? "yes" : "no") << '\n';
      io.out << '\n' << std::left << std::setw(12) << "";
      for (const auto& r : reports) io.out << std::setw(13) << r.family->to_string();
      io.out << '\n';
      for (std::size_t i = 0; i < reports.size(); ++i) {
        io.out << std::setw(12) << reports[i].family->to_string();
        for (auto s : matrix[i]) io.out << std::setw(13) << to_string(s);
        io.out << '\n';
      }
      io.out << std::right;
      break;
    }
  }
  return kExitOk;
}

}  // namespace qcjkls::cli
