#include "io.hpp"

#include <charconv>
#include <sstream>

#include "error.hpp"

namespace snr {

namespace {

struct Token {
  std::string text;
  int line = 0;
  int col = 0;
};

std::string at(const Token& t) {
  return "line " + std::to_string(t.line) + ", column " + std::to_string(t.col) + ": ";
}

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  std::istringstream stream(text);
  std::string line;
  int line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::size_t i = 0;
    while (i < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      std::size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      out.push_back({line.substr(start, i - start), line_no, static_cast<int>(start) + 1});
    }
  }
  return out;
}

bool parse_long(const std::string& text, long& value) {
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  return ec == std::errc{} && ptr == end;
}

bool is_integer(const Token& t) {
  long ignored;
  return parse_long(t.text, ignored);
}

}  // namespace

FinStructure parse_structure(const std::string& text) {
  const auto toks = tokenize(text);
  std::size_t pos = 0;

  auto next = [&](const std::string& what) -> const Token& {
    if (pos >= toks.size())
      fail(errc::parse_error, "unexpected end of input, expected " + what);
    return toks[pos++];
  };
  auto expect_keyword = [&](const std::string& kw) {
    const Token& t = next("'" + kw + "'");
    if (t.text != kw)
      fail(errc::parse_error, at(t) + "expected '" + kw + "', got '" + t.text + "'");
  };
  auto expect_int = [&](const std::string& what) -> std::pair<long, const Token*> {
    const Token& t = next(what);
    long value;
    if (!parse_long(t.text, value))
      fail(errc::parse_error, at(t) + "expected " + what + ", got '" + t.text + "'");
    return {value, &t};
  };

  expect_keyword("structure");
  const Token& name = next("a structure name");

  expect_keyword("carrier");
  auto [k, k_tok] = expect_int("the carrier size");
  if (k < 1 || k > max_carrier)
    fail(errc::out_of_range,
         at(*k_tok) + "carrier must lie in 1.." + std::to_string(max_carrier) + ", got " +
             std::to_string(k));

  auto read_table = [&](const std::string& symbol) -> OpTable {
    expect_keyword(symbol);
    auto [arity, arity_tok] = expect_int("the arity of " + symbol);
    if (arity < 2)
      fail(errc::invalid_argument,
           at(*arity_tok) + "arity of " + symbol + " must be at least 2, got " +
               std::to_string(arity));
    std::size_t expected = 1;
    for (long i = 0; i < arity; ++i) {
      expected *= static_cast<std::size_t>(k);
      if (expected > max_table_entries)
        fail(errc::size_cap, at(*arity_tok) + "table for " + symbol + " would exceed " +
                                 std::to_string(max_table_entries) + " entries");
    }
    std::vector<std::uint8_t> entries;
    entries.reserve(expected);
    while (entries.size() < expected) {
      if (pos >= toks.size() || !is_integer(toks[pos])) {
        std::string where = pos < toks.size() ? at(toks[pos]) : "";
        fail(errc::wrong_entry_count, where + "operation " + symbol + " needs " +
                                          std::to_string(expected) + " entries, found " +
                                          std::to_string(entries.size()));
      }
      const Token& t = toks[pos++];
      long value;
      parse_long(t.text, value);
      if (value < 0 || value >= k)
        fail(errc::out_of_range, at(t) + "entry " + std::to_string(value) +
                                     " is out of range for carrier " + std::to_string(k));
      entries.push_back(static_cast<std::uint8_t>(value));
    }
    if (pos < toks.size() && is_integer(toks[pos]))
      fail(errc::wrong_entry_count, at(toks[pos]) + "operation " + symbol + " takes exactly " +
                                        std::to_string(expected) + " entries; extra entry '" +
                                        toks[pos].text + "'");
    return OpTable(static_cast<int>(arity), static_cast<int>(k), std::move(entries));
  };

  OpTable f = read_table("f");
  OpTable g = read_table("g");
  expect_keyword("end");
  if (pos < toks.size())
    fail(errc::parse_error, at(toks[pos]) + "unexpected token '" + toks[pos].text +
                                "' after 'end'");
  return FinStructure(name.text, std::move(f), std::move(g));
}

namespace {

void append_table(std::string& out, const std::string& symbol, const OpTable& op) {
  out += symbol + " " + std::to_string(op.arity()) + "\n";
  const int per_line = op.carrier();
  for (std::size_t i = 0; i < op.size(); ++i) {
    out += std::to_string(op.entry(i));
    out += (static_cast<int>(i % per_line) == per_line - 1) ? '\n' : ' ';
  }
}

}  // namespace

std::string serialize_structure(const FinStructure& s) {
  std::string out;
  out += "structure " + s.name() + "\n";
  out += "carrier " + std::to_string(s.carrier()) + "\n";
  append_table(out, "f", s.f());
  append_table(out, "g", s.g());
  out += "end\n";
  return out;
}

Partition parse_partition(const std::string& text, int carrier) {
  std::vector<std::vector<Elem>> blocks;
  std::size_t start = 0;
  auto take_block = [&](const std::string& chunk) {
    if (chunk.empty()) fail(errc::parse_error, "partition literal has an empty block");
    std::vector<Elem> block;
    std::size_t from = 0;
    while (from <= chunk.size()) {
      std::size_t comma = chunk.find(',', from);
      std::string piece = chunk.substr(from, comma == std::string::npos ? std::string::npos
                                                                        : comma - from);
      long value;
      if (!parse_long(piece, value))
        fail(errc::parse_error, "partition literal has a malformed element '" + piece + "'");
      block.push_back(static_cast<Elem>(value));
      if (comma == std::string::npos) break;
      from = comma + 1;
    }
    blocks.push_back(std::move(block));
  };
  while (start <= text.size()) {
    std::size_t bar = text.find('|', start);
    take_block(text.substr(start, bar == std::string::npos ? std::string::npos : bar - start));
    if (bar == std::string::npos) break;
    start = bar + 1;
  }
  return Partition::from_blocks(carrier, blocks);
}

std::string format_partition(const Partition& p) {
  std::string out;
  for (std::size_t b = 0; b < p.blocks().size(); ++b) {
    if (b > 0) out += '|';
    const auto& block = p.blocks()[b];
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(block[i]);
    }
  }
  return out;
}

std::string format_subset(Mask sub) {
  std::string out = "{";
  bool first = true;
  for (Elem x : mask_elements(sub)) {
    if (!first) out += ',';
    out += std::to_string(x);
    first = false;
  }
  return out + "}";
}

namespace {

std::string tuple_str(const std::vector<Elem>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(v[i]);
  }
  return out + ")";
}

std::string law_name(Law law) {
  switch (law) {
    case Law::associativity: return "associativity";
    case Law::commutativity: return "commutativity";
    case Law::distributivity: return "distributivity";
    case Law::closure: return "closure";
    case Law::absorption: return "absorption";
    case Law::compatibility: return "compatibility";
    case Law::congruence: return "congruence";
    case Law::inverse_identities: return "inverse_identities";
    case Law::shift_identity: return "shift_identity";
  }
  return "unknown";
}

}  // namespace

std::string format_witness(const Witness& w) {
  const std::string lhs = " lhs=" + std::to_string(w.lhs);
  const std::string rhs = " rhs=" + std::to_string(w.rhs);
  switch (w.law) {
    case Law::associativity:
      return "associativity " + std::string(1, w.op) + ": i=" + std::to_string(w.i) +
             " j=" + std::to_string(w.j) + " args=" + tuple_str(w.args) + lhs + rhs;
    case Law::commutativity:
      return "commutativity " + std::string(1, w.op) + ": i=" + std::to_string(w.i) +
             " j=" + std::to_string(w.j) + " args=" + tuple_str(w.args) + lhs + rhs;
    case Law::distributivity:
      return "distributivity slot " + std::to_string(w.pos) + ": a=" + tuple_str(w.args) +
             " context=" + tuple_str(w.extra) + lhs + rhs;
    case Law::closure:
      return "closure " + std::string(1, w.op) + ": args=" + tuple_str(w.args) +
             " image=" + std::to_string(w.lhs);
    case Law::absorption:
      return "absorption slot " + std::to_string(w.pos) + ": args=" + tuple_str(w.args) +
             " image=" + std::to_string(w.lhs);
    case Law::compatibility:
      return "compatibility " + std::string(1, w.op) + ": args=" + tuple_str(w.args) + lhs + rhs;
    case Law::congruence:
      return "congruence " + std::string(1, w.op) + ": pos=" + std::to_string(w.pos) +
             " args=" + tuple_str(w.args) + " mate=" + std::to_string(w.extra.at(0)) + lhs + rhs +
             " lhs_block=" + std::to_string(w.i) + " rhs_block=" + std::to_string(w.j);
    case Law::inverse_identities:
      return "inverse_identities: x=" + std::to_string(w.args.at(0)) +
             " inv=" + std::to_string(w.args.at(1)) + " context=" + tuple_str(w.extra) +
             " leg=" + std::to_string(w.pos) + lhs + rhs;
    case Law::shift_identity:
      return "shift_identity: i=" + std::to_string(w.i) + " j=" + std::to_string(w.j) +
             " context=" + tuple_str(w.args) + lhs + rhs;
  }
  return "unknown witness";
}

namespace {

std::string elems_str(const std::vector<Elem>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(v[i]);
  }
  return out + "}";
}

std::string ints_str(const std::vector<int>& v) { return elems_str(v); }

void verdict_line(std::string& out, const std::string& label, const AxiomVerdict& v) {
  out += label + ": " + (v.holds ? "yes" : "no") + "\n";
  if (!v.holds) out += "  witness: " + format_witness(*v.witness) + "\n";
}

}  // namespace

std::string render_classification(const FinStructure& s, const ClassificationReport& report) {
  std::string out;
  out += "structure " + s.name() + ": carrier " + std::to_string(s.carrier()) + ", f arity " +
         std::to_string(s.m()) + ", g arity " + std::to_string(s.n()) + "\n";
  verdict_line(out, "f associative", report.f_associative);
  verdict_line(out, "f commutative", report.f_commutative);
  verdict_line(out, "g associative", report.g_associative);
  for (int t = 1; t <= s.n(); ++t)
    verdict_line(out, "distributive slot " + std::to_string(t), report.distributive[t - 1]);
  out += "t-seminearring slots: " + ints_str(report.t_snr) + "\n";
  out += "right seminearring (t=1): " + std::string(report.is_right_snr ? "yes" : "no") + "\n";
  out += "left seminearring (t=" + std::to_string(s.n()) +
         "): " + std::string(report.is_left_snr ? "yes" : "no") + "\n";
  out += "f-identities: " + elems_str(report.f_identities) + "\n";
  out += "g-zeros: " + elems_str(report.g_zeros) + "\n";
  out += "absorbing zeros: " + elems_str(report.absorbing_zeros) + "\n";
  out += "unities: " + elems_str(report.g_identities) + "\n";
  out += "semiring: " + std::string(report.is_semiring ? "yes" : "no") + "\n";
  return out;
}

namespace {

nlohmann::ordered_json witness_json(const std::string& for_verdict, const Witness& w) {
  nlohmann::ordered_json j;
  j["for"] = for_verdict;
  j["law"] = law_name(w.law);
  j["op"] = std::string(1, w.op);
  j["i"] = w.i;
  j["j"] = w.j;
  j["pos"] = w.pos;
  j["args"] = w.args;
  j["extra"] = w.extra;
  j["lhs"] = w.lhs;
  j["rhs"] = w.rhs;
  return j;
}

}  // namespace

nlohmann::ordered_json classification_json(const FinStructure& s,
                                           const ClassificationReport& report) {
  nlohmann::ordered_json j;
  j["name"] = s.name();
  j["k"] = s.carrier();
  j["m"] = s.m();
  j["n"] = s.n();

  nlohmann::ordered_json verdicts;
  verdicts["f_associative"] = report.f_associative.holds;
  verdicts["f_commutative"] = report.f_commutative.holds;
  verdicts["g_associative"] = report.g_associative.holds;
  nlohmann::ordered_json distributive;
  for (int t = 1; t <= s.n(); ++t)
    distributive[std::to_string(t)] = report.distributive[t - 1].holds;
  verdicts["distributive"] = distributive;
  verdicts["t_snr"] = report.t_snr;
  verdicts["is_right_seminearring"] = report.is_right_snr;
  verdicts["is_left_seminearring"] = report.is_left_snr;
  verdicts["is_semiring"] = report.is_semiring;
  j["verdicts"] = verdicts;

  nlohmann::ordered_json witnesses = nlohmann::ordered_json::array();
  if (!report.f_associative.holds)
    witnesses.push_back(witness_json("f_associative", *report.f_associative.witness));
  if (!report.f_commutative.holds)
    witnesses.push_back(witness_json("f_commutative", *report.f_commutative.witness));
  if (!report.g_associative.holds)
    witnesses.push_back(witness_json("g_associative", *report.g_associative.witness));
  for (int t = 1; t <= s.n(); ++t)
    if (!report.distributive[t - 1].holds)
      witnesses.push_back(
          witness_json("distributive_" + std::to_string(t), *report.distributive[t - 1].witness));
  j["witnesses"] = witnesses;

  nlohmann::ordered_json sets;
  sets["f_identities"] = report.f_identities;
  sets["g_zeros"] = report.g_zeros;
  sets["absorbing_zeros"] = report.absorbing_zeros;
  sets["unities"] = report.g_identities;
  j["sets"] = sets;
  return j;
}

std::string render_units(const UnitsReport& report) {
  std::string out;
  out += "unity: " + std::to_string(report.unity) + "\n";
  out += "units (" + std::to_string(report.units.size()) + "): " + elems_str(report.units) + "\n";
  out += "inverses:";
  for (Elem x : report.units)
    out += " " + std::to_string(x) + "->" + std::to_string(report.inverse_of[x]);
  out += "\n";
  out += "ambiguous inverses: " +
         (report.ambiguous.empty() ? std::string("none") : elems_str(report.ambiguous)) + "\n";
  return out;
}

std::string render_units_theorems(const UnitsTheoremSummary& summary) {
  std::string out;
  if (summary.inverse_identities.holds) {
    out += "inverse identities: ok (" + std::to_string(summary.inverse_identity_checks) +
           " checks)\n";
  } else {
    out += "inverse identities: FAIL\n  witness: " +
           format_witness(*summary.inverse_identities.witness) + "\n";
  }
  if (summary.shift.holds) {
    out += "shift identity: ok (" + std::to_string(summary.shift_checks) + " checks)\n";
  } else {
    out += "shift identity: FAIL\n  witness: " + format_witness(*summary.shift.witness) + "\n";
  }
  if (summary.products_closed) {
    out += "product closure: ok (" + std::to_string(summary.product_checks) + " products)\n";
  } else {
    out += "product closure: FAIL\n  witness: " + summary.product_failure + "\n";
  }
  return out;
}

}  // namespace snr
