#pragma once

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <limits>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "json.hpp"
#include "knotsig/pretzel.hpp"

namespace knotsig {

using Json = nlohmann::ordered_json;

/// A named Seifert matrix as read from disk, before validation.
struct KnotRecord {
  std::string name;
  IntMatrix matrix;
};

namespace detail {

inline Integer parse_entry(const Json& v) {
  if (v.is_number_integer()) return Integer(v.get<long long>());
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    const Rational r = parse_rational(s);
    if (den(r) == 1 && s.find('/') == std::string::npos) return num(r);
  }
  throw Error(ErrorCode::Parse, "matrix entry " + v.dump() + " is not an integer");
}

/// JSON number when it fits in 64 bits, decimal string otherwise.
inline Json json_integer(const Integer& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return Json(v.convert_to<long long>());
  return Json(v.str());
}

}  // namespace detail

/// {"name": "...", "matrix": [[...], ...]}; rows need not be square here,
/// shape errors surface when the matrix is validated.
inline KnotRecord parse_knot_record(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::Parse, "knot record must be a JSON object");
  if (!j.contains("name") || !j["name"].is_string())
    throw Error(ErrorCode::Parse, "knot record needs a string 'name'");
  if (!j.contains("matrix") || !j["matrix"].is_array())
    throw Error(ErrorCode::Parse, "knot record needs an array 'matrix'");
  KnotRecord rec;
  rec.name = j["name"].get<std::string>();
  if (rec.name.empty()) throw Error(ErrorCode::Parse, "knot name must be nonempty");
  for (const auto& row : j["matrix"]) {
    if (!row.is_array()) throw Error(ErrorCode::Parse, "matrix rows must be arrays");
    std::vector<Integer> r;
    for (const auto& v : row) r.push_back(detail::parse_entry(v));
    rec.matrix.push_back(std::move(r));
  }
  return rec;
}

inline KnotRecord parse_knot_text(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
  return parse_knot_record(j);
}

inline Json to_json(const KnotRecord& rec) {
  Json rows = Json::array();
  for (const auto& row : rec.matrix) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(detail::json_integer(v));
    rows.push_back(std::move(r));
  }
  return Json{{"name", rec.name}, {"matrix", std::move(rows)}};
}

inline Json to_json(const Witness& w) {
  return Json{{"x", to_string(w.point.x())},
              {"half", std::string(to_string(w.point.half()))},
              {"rank", w.inertia.rank},
              {"signature", w.inertia.signature}};
}

inline Json to_json(const ObstructionVerdict& v) {
  return Json{{"verdict", std::string(to_string(v.verdict))},
              {"criterion", v.criterion},
              {"witness", v.witness ? to_json(*v.witness) : Json(nullptr)}};
}

/// Upper and lower x bounds of arc i of a profile.
inline std::pair<Rational, Rational> arc_bounds(const SignatureProfile& prof, std::size_t i) {
  Rational hi = i == 0 ? Rational(1) : prof.jumps[i - 1].lo;
  Rational lo = i == prof.jumps.size() ? Rational(-1) : prof.jumps[i].hi;
  return {lo, hi};
}

/// Full invariant report for one validated knot.
inline Json knot_report(const SeifertMatrix& a) {
  const SignatureProfile prof = signature_profile(a);

  Json alex = Json::array();
  for (const auto& c : prof.alexander.coefficients()) alex.push_back(detail::json_integer(c));

  Json jumps = Json::array();
  for (std::size_t i = 0; i < prof.jumps.size(); ++i) {
    const auto& iv = prof.jumps[i];
    Json jump{{"lo", to_string(iv.lo)}, {"hi", to_string(iv.hi)}, {"multiplicity", iv.multiplicity}};
    if (const auto& root = prof.jump_roots[i]) {
      const Inertia in = levine_tristram_at(a, CirclePoint(*root, Half::Upper));
      jump["root"] = to_string(*root);
      jump["rank"] = in.rank;
      jump["signature"] = in.signature;
    } else {
      jump["root"] = nullptr;
      jump["rank"] = nullptr;
      jump["signature"] = nullptr;
    }
    jumps.push_back(std::move(jump));
  }

  Json arcs = Json::array();
  for (std::size_t i = 0; i < prof.arc_values.size(); ++i) {
    const auto [lo, hi] = arc_bounds(prof, i);
    arcs.push_back(Json{{"x_lo", to_string(lo)},
                        {"x_hi", to_string(hi)},
                        {"sample", to_string(prof.arc_samples[i])},
                        {"signature", prof.arc_values[i]}});
  }

  Json out;
  out["name"] = a.name().value_or("");
  out["dimension"] = a.dimension();
  out["genus"] = a.genus();
  out["alexander"] = std::move(alex);
  out["alexander_text"] = prof.alexander.str();
  out["trace_polynomial"] = prof.trace.str('x');
  out["determinant"] = detail::json_integer(abs(prof.alexander.eval(Integer(-1))));
  out["signature_at_minus_one"] = prof.value_at_minus_one;
  out["profile"] = Json{{"jumps", std::move(jumps)}, {"arcs", std::move(arcs)}};
  out["slice"] = to_json(slice_obstruction(a, prof));
  out["doubly_slice"] = to_json(doubly_slice_obstruction(a, prof));
  return out;
}

inline Json knot_report(const KnotRecord& rec) {
  return knot_report(validate_seifert(rec.matrix, rec.name));
}

/// Report for a parameter triple that must be a permutation of (3, -3, -m), m >= 3.
inline Json pretzel_report(long long p, long long q, long long r) {
  std::vector<long long> rest{p, q, r};
  auto take = [&](long long v) {
    auto it = std::find(rest.begin(), rest.end(), v);
    if (it == rest.end()) return false;
    rest.erase(it);
    return true;
  };
  const bool ok = take(3) && take(-3) && rest.size() == 1 && -rest[0] >= 3;
  const PretzelParams params({p, q, r});
  if (!ok)
    throw Error(ErrorCode::UnsupportedFamily,
                params.str() + " is not P(3,-3,-m) with m >= 3 up to permutation");
  const long long m = -rest[0];

  Json out;
  out["name"] = params.str();
  out["params"] = params.params();
  out["m"] = m;
  out["family"] = m % 2 != 0 ? "odd" : "even";
  out["doubly_slice"] = to_json(pretzel_3_minus3_m_verdict(m));
  if (m % 2 == 0) out["seifert_report"] = knot_report(seifert_matrix_A_k(m / 2));
  return out;
}

/// One JSON object per nonblank line. Throws Parse with the 1-based line
/// number on malformed lines or duplicate names.
inline std::vector<KnotRecord> parse_corpus(std::string_view text) {
  std::vector<KnotRecord> out;
  std::set<std::string> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    try {
      KnotRecord rec = parse_knot_text(line);
      if (!seen.insert(rec.name).second)
        throw Error(ErrorCode::Parse, "duplicate knot name '" + rec.name + "'");
      out.push_back(std::move(rec));
    } catch (const Error& e) {
      throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

/// Reports for a corpus, one JSON line per record in input order. Validation
/// failures become {"name", "error"} lines. `jobs` = 0 uses every core; the
/// output does not depend on it.
inline std::string run_batch(const std::vector<KnotRecord>& corpus, unsigned jobs = 1) {
  std::vector<std::string> lines(corpus.size());
  auto work = [&](std::size_t i) {
    try {
      lines[i] = knot_report(corpus[i]).dump();
    } catch (const Error& e) {
      lines[i] = Json{{"name", corpus[i].name}, {"error", e.what()}}.dump();
    }
  };
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(corpus.size(), 1)));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < corpus.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < corpus.size(); i = next++) work(i);
      });
  }
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

namespace detail {

inline std::string approx(const Rational& r) {
  std::ostringstream os;
  os << std::setprecision(12) << to_double(r);
  return os.str();
}

}  // namespace detail

/// Tab-separated step table of sigma_K over the upper half circle, ordered by
/// decreasing x: arc rows, a jump row per isolating interval, and a final row
/// for omega = -1. The *_approx columns are decimal and for plotting only.
inline std::string profile_tsv(const SeifertMatrix& a) {
  const SignatureProfile prof = signature_profile(a);
  std::ostringstream os;
  os << "kind\tx_lo\tx_hi\tsignature\tx_lo_approx\tx_hi_approx\n";
  auto row = [&](std::string_view kind, const Rational& lo, const Rational& hi, const std::string& sig) {
    os << kind << '\t' << to_string(lo) << '\t' << to_string(hi) << '\t' << sig << '\t'
       << detail::approx(lo) << '\t' << detail::approx(hi) << '\n';
  };
  for (std::size_t i = 0; i < prof.arc_values.size(); ++i) {
    const auto [lo, hi] = arc_bounds(prof, i);
    row("arc", lo, hi, std::to_string(prof.arc_values[i]));
    if (i < prof.jumps.size()) {
      const auto& iv = prof.jumps[i];
      std::string sig = "unevaluated";
      if (const auto& root = prof.jump_roots[i])
        sig = std::to_string(levine_tristram_at(a, CirclePoint(*root, Half::Upper)).signature);
      row("jump", iv.lo, iv.hi, sig);
    }
  }
  row("point", Rational(-1), Rational(-1), std::to_string(prof.value_at_minus_one));
  return os.str();
}

}  // namespace knotsig
