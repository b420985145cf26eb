// catpart command-line tool. Talks to the library only through catpart/catpart.h.
#include "catpart/catpart.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

enum Exit { kOk = 0, kPropertyFailure = 1, kUsage = 2, kCap = 3 };

// Raised after a library call fails; carries the exit code to use.
struct Failure {
  int code;
  std::string message;
};

int exit_for(catpart_status status) {
  switch (status) {
    case CATPART_OK: return kOk;
    case CATPART_ERR_CAP_EXCEEDED: return kCap;
    case CATPART_ERR_INTERNAL: return kPropertyFailure;
    default: return kUsage;
  }
}

template <typename T, void (*Destroy)(T*)>
struct Deleter {
  void operator()(T* p) const { Destroy(p); }
};
using Context = std::unique_ptr<catpart_context, Deleter<catpart_context, catpart_context_destroy>>;
using PartitionPtr = std::unique_ptr<catpart_partition, Deleter<catpart_partition, catpart_partition_destroy>>;
using FamilyPtr = std::unique_ptr<catpart_family, Deleter<catpart_family, catpart_family_destroy>>;
using PairPtr = std::unique_ptr<catpart_pair, Deleter<catpart_pair, catpart_pair_destroy>>;
using ForestPtr = std::unique_ptr<catpart_forest, Deleter<catpart_forest, catpart_forest_destroy>>;
using ReportPtr = std::unique_ptr<catpart_report, Deleter<catpart_report, catpart_report_destroy>>;

class Session {
 public:
  Session() : ctx_(catpart_context_create()) {
    if (!ctx_) throw Failure{kPropertyFailure, "cannot allocate a library context"};
  }

  catpart_context* ctx() const { return ctx_.get(); }

  void ok(catpart_status status) const {
    if (status != CATPART_OK) throw Failure{exit_for(status), catpart_last_error(ctx_.get())};
  }

  // Takes ownership of a library string.
  std::string take(char* s) const {
    std::string out(s);
    catpart_string_free(s);
    return out;
  }

  PartitionPtr partition(const std::string& text, int slack) const {
    catpart_partition* out = nullptr;
    ok(catpart_partition_parse_in_pnk(ctx(), text.c_str(), slack, &out));
    return PartitionPtr(out);
  }

  std::string render(const catpart_partition* mu, catpart_format format) const {
    char* s = nullptr;
    ok(catpart_partition_render(ctx(), mu, format, &s));
    return take(s);
  }

  std::string csv(const catpart_partition* mu) const {
    auto s = render(mu, CATPART_FORMAT_TEXT);
    if (!s.empty() && s.back() == '\n') s.pop_back();
    return s;
  }

 private:
  Context ctx_;
};

catpart_format format_of(const std::string& name) {
  catpart_format format{};
  if (!catpart_format_parse(name.c_str(), &format)) throw Failure{kUsage, "unknown format '" + name + "'"};
  return format;
}

// --input takes a path when one exists, otherwise the literal text.
std::string read_input(const std::string& arg) {
  std::ifstream file(arg);
  if (!file) return arg;
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw Failure{kUsage, "cannot open output file " + path};
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

std::uint64_t cap_from_environment() {
  const char* raw = std::getenv("CAP_STRUCTURES");
  if (raw == nullptr || *raw == '\0') return catpart_default_cap();
  try {
    std::size_t used = 0;
    const auto value = std::stoull(raw, &used);
    if (used != std::string(raw).size() || value == 0) throw std::invalid_argument(raw);
    return value;
  } catch (const std::exception&) {
    throw Failure{kUsage, std::string("CAP_STRUCTURES must be a positive integer, got '") + raw + "'"};
  }
}

struct EnumerateArgs {
  std::string square;
  int omega = 0;
  int parts = 0;
  std::string format = "text";
  std::string output;
};

int run_enumerate(const Session& s, const EnumerateArgs& a) {
  const auto format = format_of(a.format);
  if (format == CATPART_FORMAT_DOT) throw Failure{kUsage, "enumerate renders partitions: use text, json or young-ascii"};
  catpart_family* raw = nullptr;
  std::string predicted;
  std::string formula;
  if (!a.square.empty()) {
    auto core = s.partition(a.square, 0);
    if (!catpart_partition_is_square(core.get())) {
      throw Failure{kUsage, "--square core " + a.square + " is not a square partition"};
    }
    s.ok(catpart_family_square(s.ctx(), core.get(), a.parts, &raw));
    catpart_partition* dual = nullptr;
    s.ok(catpart_partition_tau(s.ctx(), core.get(), &dual));
    const bool self_dual = catpart_partition_equal(core.get(), PartitionPtr(dual).get());
    const long index = a.parts - static_cast<long>(catpart_partition_size(core.get())) + 1;
    char* c = nullptr;
    s.ok(catpart_count_catalan(s.ctx(), index, &c));
    const auto catalan = s.take(c);
    formula = (self_dual ? "" : "2*") + std::string("c_") + std::to_string(index);
    predicted = self_dual ? catalan : std::to_string(2 * std::stoull(catalan));
  } else {
    s.ok(catpart_family_omega(s.ctx(), a.omega, a.parts, &raw));
    char* b = nullptr;
    s.ok(catpart_count_ballot(s.ctx(), a.parts, a.omega - 1, &b));
    predicted = s.take(b);
    formula = "b_{" + std::to_string(a.parts) + "," + std::to_string(a.omega - 1) + "}";
  }
  FamilyPtr family(raw);
  char* rendered = nullptr;
  s.ok(catpart_family_render(s.ctx(), family.get(), format, &rendered));
  auto body = s.take(rendered);
  const auto size = std::to_string(catpart_family_size(family.get()));
  const bool match = size == predicted;
  const auto trailer = size + (match ? " = " : " != ") + formula + (match ? "" : " (predicted " + predicted + ")");

  Output out(a.output);
  if (format == CATPART_FORMAT_JSON) {
    auto doc = nlohmann::json::parse(body);
    doc["predicted"] = predicted;
    doc["formula"] = formula;
    doc["trailer"] = trailer;
    out.stream() << doc.dump(2) << "\n";
  } else {
    out.stream() << body << trailer << "\n";
  }
  if (!match) {
    std::cerr << "catpart: cardinality mismatch: " << trailer << "\n";
    return kPropertyFailure;
  }
  return kOk;
}

struct CheckArgs {
  std::string mu;
  bool square = false;
  std::string core;
  int omega = 0;
  std::string format = "text";
};

int run_check_square(const Session& s, const CheckArgs& a, bool json) {
  auto mu = s.partition(a.mu, 0);
  int b = 0, k = 0;
  catpart_partition* raw_core = nullptr;
  s.ok(catpart_square_witness(s.ctx(), mu.get(), &b, &k, &raw_core));
  PartitionPtr core(raw_core);
  catpart_partition* raw_dual = nullptr;
  s.ok(catpart_partition_tau(s.ctx(), core.get(), &raw_dual));
  PartitionPtr dual(raw_dual);
  catpart_partition* raw_theta = nullptr;
  s.ok(catpart_theta(s.ctx(), mu.get(), &raw_theta));
  PartitionPtr reduced(raw_theta);
  const bool self_dual = catpart_partition_equal(core.get(), dual.get());

  std::optional<bool> member;
  if (!a.core.empty()) {
    auto lambda = s.partition(a.core, 0);
    if (!catpart_partition_is_square(lambda.get())) throw Failure{kUsage, "--core " + a.core + " is not square"};
    int verdict = 0;
    s.ok(catpart_member_square(s.ctx(), mu.get(), lambda.get(), &verdict));
    member = verdict != 0;
  }

  if (json) {
    nlohmann::json doc{{"mu", s.csv(mu.get())},      {"b", b},
                       {"k", k},                      {"core", s.csv(core.get())},
                       {"tau_core", s.csv(dual.get())}, {"self_dual", self_dual},
                       {"theta", s.csv(reduced.get())}};
    if (member) doc["member"] = *member;
    std::cout << doc.dump(2) << "\n";
    return kOk;
  }
  if (member) std::cout << (*member ? "member" : "not member") << " of P^" << catpart_partition_size(mu.get()) << "(" << a.core << ")\n";
  std::cout << "b=" << b << " k=" << k << " core=(" << s.csv(core.get()) << ")\n";
  std::cout << "tau(core)=(" << s.csv(dual.get()) << ")" << (self_dual ? " self-dual" : "") << "\n";
  std::cout << "theta=(" << s.csv(reduced.get()) << ")\n";
  return kOk;
}

int run_check_omega(const Session& s, const CheckArgs& a, bool json) {
  if (a.omega < 1) throw Failure{kUsage, "--omega needs m >= 1"};
  auto mu = s.partition(a.mu, a.omega - 1);
  const auto ell = catpart_partition_size(mu.get());
  std::vector<int> tilde(ell);
  s.ok(catpart_mu_tilde(s.ctx(), mu.get(), a.omega, tilde.data()));
  int member = 0;
  s.ok(catpart_member_omega(s.ctx(), mu.get(), a.omega, &member));

  auto cls = [&](std::size_t i) {
    const auto v = static_cast<std::size_t>(tilde[i - 1]);
    return v > i ? "L" : v == i ? "M" : "H";
  };
  if (json) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 1; i <= ell; ++i) {
      rows.push_back({{"i", i}, {"mu", catpart_partition_part(mu.get(), i)}, {"tilde", tilde[i - 1]}, {"class", cls(i)}});
    }
    std::cout << nlohmann::json{{"mu", s.csv(mu.get())}, {"m", a.omega}, {"member", member != 0}, {"table", rows}}.dump(2)
              << "\n";
    return kOk;
  }
  std::cout << (member ? "member" : "not member") << " of P^" << ell << "(Omega_" << a.omega << ")\n";
  std::cout << "mu~=(";
  for (std::size_t i = 0; i < ell; ++i) std::cout << (i ? "," : "") << tilde[i];
  std::cout << ")\n";
  std::cout << "  i  mu(i)  mu~(i)  class\n";
  for (std::size_t i = 1; i <= ell; ++i) {
    char line[64];
    std::snprintf(line, sizeof line, "%3zu  %5d  %6d  %s\n", i, catpart_partition_part(mu.get(), i), tilde[i - 1], cls(i));
    std::cout << line;
  }
  return kOk;
}

int run_check(const Session& s, const CheckArgs& a) {
  const auto format = format_of(a.format);
  if (format != CATPART_FORMAT_TEXT && format != CATPART_FORMAT_JSON) {
    throw Failure{kUsage, "check reports as text or json"};
  }
  const bool json = format == CATPART_FORMAT_JSON;
  return a.omega > 0 ? run_check_omega(s, a, json) : run_check_square(s, a, json);
}

struct ConvertArgs {
  bool to_trees = false;
  bool to_forest = false;
  bool to_partition = false;
  std::string input;
  std::string from = "auto";
  int m = 0;
  std::string format = "text";
  bool labels = false;
  bool roundtrip = false;
  std::string output;
};

std::string render_pair(const Session& s, const catpart_pair* pair, catpart_format format) {
  char* out = nullptr;
  s.ok(catpart_pair_render(s.ctx(), pair, format, &out));
  return s.take(out);
}

int roundtrip_failed(const std::string& what) {
  std::cerr << "catpart: round-trip failed: " << what << "\n";
  return kPropertyFailure;
}

int run_convert(const Session& s, const ConvertArgs& a) {
  const auto format = format_of(a.format);
  const auto text = read_input(a.input);
  Output out(a.output);

  if (a.to_trees) {
    auto mu = s.partition(text, 0);
    catpart_pair* raw = nullptr;
    s.ok(catpart_pair_from_partition(s.ctx(), mu.get(), &raw));
    PairPtr pair(raw);
    out.stream() << render_pair(s, pair.get(), format);
    if (a.roundtrip) {
      catpart_partition* back = nullptr;
      s.ok(catpart_pair_to_partition(s.ctx(), pair.get(), &back));
      if (!catpart_partition_equal(PartitionPtr(back).get(), mu.get())) return roundtrip_failed("pair -> partition");
      catpart_pair* reparsed = nullptr;
      s.ok(catpart_pair_parse(s.ctx(), render_pair(s, pair.get(), CATPART_FORMAT_DOT).c_str(), &reparsed));
      if (!catpart_pair_equal(PairPtr(reparsed).get(), pair.get())) return roundtrip_failed("DOT re-parse");
    }
    return kOk;
  }

  if (a.to_forest) {
    int m = a.m;
    if (m == 0) {
      // JSON input may carry the bound, which fixes m = bound - ell + 1.
      catpart_partition* raw = nullptr;
      s.ok(catpart_partition_parse(s.ctx(), text.c_str(), 0, &raw));
      PartitionPtr loose(raw);
      m = catpart_partition_bound(loose.get()) - static_cast<int>(catpart_partition_size(loose.get())) + 1;
      if (text.find('{') == std::string::npos || m < 1) throw Failure{kUsage, "--to-forest needs --m (or JSON input with a bound)"};
    }
    auto mu = s.partition(text, m - 1);
    catpart_forest* raw = nullptr;
    s.ok(catpart_forest_from_partition(s.ctx(), mu.get(), m, &raw));
    ForestPtr forest(raw);
    char* rendered = nullptr;
    s.ok(a.labels ? catpart_forest_render_decomposition(s.ctx(), forest.get(), format, &rendered)
                  : catpart_forest_render(s.ctx(), forest.get(), format, &rendered));
    out.stream() << s.take(rendered);
    if (a.roundtrip) {
      catpart_partition* back = nullptr;
      s.ok(catpart_forest_to_partition(s.ctx(), forest.get(), &back));
      if (!catpart_partition_equal(PartitionPtr(back).get(), mu.get())) return roundtrip_failed("forest -> partition");
    }
    return kOk;
  }

  if (format == CATPART_FORMAT_DOT) throw Failure{kUsage, "partitions render as text, json or young-ascii"};
  std::string from = a.from;
  if (from == "auto") {
    // DOT input is always a labeled pair; otherwise ';' or a "slots" key marks a forest.
    const bool dot = text.find("digraph") != std::string::npos;
    const bool forest = text.find(';') != std::string::npos || text.find("\"slots\"") != std::string::npos;
    from = !dot && forest ? "forest" : "pair";
  }
  PartitionPtr mu;
  if (from == "forest") {
    catpart_forest* raw = nullptr;
    s.ok(catpart_forest_parse(s.ctx(), text.c_str(), &raw));
    ForestPtr forest(raw);
    catpart_partition* image = nullptr;
    s.ok(catpart_forest_to_partition(s.ctx(), forest.get(), &image));
    mu.reset(image);
    if (a.roundtrip) {
      catpart_forest* back = nullptr;
      s.ok(catpart_forest_from_partition(s.ctx(), mu.get(), catpart_forest_slots(forest.get()), &back));
      if (!catpart_forest_equal(ForestPtr(back).get(), forest.get())) return roundtrip_failed("partition -> forest");
    }
  } else if (from == "pair") {
    catpart_pair* raw = nullptr;
    s.ok(catpart_pair_parse(s.ctx(), text.c_str(), &raw));
    PairPtr pair(raw);
    catpart_partition* image = nullptr;
    s.ok(catpart_pair_to_partition(s.ctx(), pair.get(), &image));
    mu.reset(image);
    if (a.roundtrip) {
      catpart_pair* back = nullptr;
      s.ok(catpart_pair_from_partition(s.ctx(), mu.get(), &back));
      if (!catpart_pair_equal(PairPtr(back).get(), pair.get())) return roundtrip_failed("partition -> pair");
    }
  } else {
    throw Failure{kUsage, "--from must be pair, forest or auto"};
  }
  out.stream() << s.render(mu.get(), format);
  return kOk;
}

struct CountArgs {
  long catalan = -1;
  std::vector<long> ballot;
  std::vector<long> gen_catalan;
  std::vector<long> binomial;
};

int run_count(const Session& s, const CountArgs& a) {
  char* out = nullptr;
  if (a.catalan >= 0) {
    s.ok(catpart_count_catalan(s.ctx(), a.catalan, &out));
  } else if (!a.ballot.empty()) {
    s.ok(catpart_count_ballot(s.ctx(), a.ballot[0], a.ballot[1], &out));
  } else if (!a.gen_catalan.empty()) {
    s.ok(catpart_count_generalized_catalan(s.ctx(), a.gen_catalan[0], a.gen_catalan[1], a.gen_catalan[2], &out));
  } else {
    s.ok(catpart_count_binomial(s.ctx(), a.binomial[0], a.binomial[1], &out));
  }
  std::cout << s.take(out) << "\n";
  return kOk;
}

struct VerifyArgs {
  int max_parts = 6;
  int max_m = 3;
  std::string report;
  std::string mutation;
  std::string format = "text";
};

int run_verify(const Session& s, const VerifyArgs& a) {
  const auto format = format_of(a.format);
  catpart_report* raw = nullptr;
  s.ok(catpart_verify(s.ctx(), a.max_parts, a.max_m, a.mutation.empty() ? nullptr : a.mutation.c_str(), &raw));
  ReportPtr report(raw);
  char* text = nullptr;
  s.ok(catpart_report_render(s.ctx(), report.get(), format, &text));
  std::cout << s.take(text);
  if (!a.report.empty()) {
    char* json = nullptr;
    s.ok(catpart_report_render(s.ctx(), report.get(), CATPART_FORMAT_JSON, &json));
    Output file(a.report);
    file.stream() << s.take(json);
  }
  return catpart_report_passed(report.get()) ? kOk : kPropertyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Square-core and Omega families of partitions, their closed forms and tree bijections"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "catpart 1.0.0");

  EnumerateArgs en;
  auto* enumerate = app.add_subcommand("enumerate", "List a family in canonical order with its predicted size");
  auto* en_square = enumerate->add_option("--square", en.square, "square core, comma-separated");
  auto* en_omega = enumerate->add_option("--omega", en.omega, "m for the family grown from (1),...,(m)")->check(CLI::PositiveNumber);
  en_square->excludes(en_omega);
  enumerate->add_option("--parts", en.parts, "ell, the number of parts")->required()->check(CLI::PositiveNumber);
  enumerate->add_option("--format", en.format, "text | json | young-ascii");
  enumerate->add_option("-o,--output", en.output, "write here instead of standard output");

  CheckArgs ck;
  auto* check = app.add_subcommand("check", "Membership verdict with the square-core witness or the mu~ table");
  check->add_option("--mu", ck.mu, "partition, comma-separated or JSON")->required();
  auto* ck_square = check->add_flag("--square", ck.square, "square-core mode");
  check->add_option("--core", ck.core, "square core to test membership against")->needs(ck_square);
  auto* ck_omega = check->add_option("--omega", ck.omega, "Omega mode with this m")->check(CLI::PositiveNumber);
  ck_square->excludes(ck_omega);
  check->add_option("--format", ck.format, "text | json");

  ConvertArgs cv;
  auto* convert = app.add_subcommand("convert", "Partition <-> tree pair and partition <-> forest bijections");
  auto* to_trees = convert->add_flag("--to-trees", cv.to_trees, "partition in P^ell((1)) to labeled tree pair");
  auto* to_forest = convert->add_flag("--to-forest", cv.to_forest, "partition in P^ell(Omega_m) to forest");
  auto* to_partition = convert->add_flag("--to-partition", cv.to_partition, "pair or forest to partition");
  to_trees->excludes(to_forest)->excludes(to_partition);
  to_forest->excludes(to_partition);
  convert->add_option("--input", cv.input, "file path or literal input")->required();
  convert->add_option("--from", cv.from, "pair | forest | auto (for --to-partition)");
  convert->add_option("--m", cv.m, "number of forest slots (for --to-forest)")->check(CLI::PositiveNumber);
  convert->add_option("--format", cv.format, "text | json | dot (young-ascii for partitions)");
  convert->add_flag("--labels", cv.labels, "with --to-forest, show the L/M/H split and labeled pairs");
  convert->add_flag("--roundtrip", cv.roundtrip, "convert back and require the identity");
  convert->add_option("-o,--output", cv.output, "write here instead of standard output");

  CountArgs ct;
  auto* count = app.add_subcommand("count", "Exact counts");
  auto* c_cat = count->add_option("--catalan", ct.catalan, "n")->check(CLI::NonNegativeNumber);
  auto* c_bal = count->add_option("--ballot", ct.ballot, "ell m")->expected(2);
  auto* c_gen = count->add_option("--gen-catalan", ct.gen_catalan, "k gamma n")->expected(3);
  auto* c_bin = count->add_option("--binomial", ct.binomial, "n r")->expected(2);
  c_cat->excludes(c_bal)->excludes(c_gen)->excludes(c_bin);
  c_bal->excludes(c_gen)->excludes(c_bin);
  c_gen->excludes(c_bin);

  VerifyArgs vf;
  auto* verify = app.add_subcommand("verify", "Run every property suite exhaustively");
  verify->add_option("--max-parts", vf.max_parts, "largest ell swept")->check(CLI::PositiveNumber);
  verify->add_option("--max-m", vf.max_m, "largest m swept; 0 skips the Omega suites")->check(CLI::NonNegativeNumber);
  verify->add_option("--report", vf.report, "write the JSON report (with wall times) here");
  verify->add_option("--format", vf.format, "text | json");
  verify->add_option("--mutate", vf.mutation)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (enumerate->parsed() && en.square.empty() && en.omega == 0) throw Failure{kUsage, "enumerate needs --square or --omega"};
    if (check->parsed() && !ck.square && ck.omega == 0) throw Failure{kUsage, "check needs --square or --omega"};
    if (convert->parsed() && !cv.to_trees && !cv.to_forest && !cv.to_partition) {
      throw Failure{kUsage, "convert needs --to-trees, --to-forest or --to-partition"};
    }
    if (count->parsed() && ct.catalan < 0 && ct.ballot.empty() && ct.gen_catalan.empty() && ct.binomial.empty()) {
      throw Failure{kUsage, "count needs --catalan, --ballot, --gen-catalan or --binomial"};
    }

    Session session;
    catpart_context_set_cap(session.ctx(), cap_from_environment());
    if (enumerate->parsed()) return run_enumerate(session, en);
    if (check->parsed()) return run_check(session, ck);
    if (convert->parsed()) return run_convert(session, cv);
    if (count->parsed()) return run_count(session, ct);
    return run_verify(session, vf);
  } catch (const Failure& f) {
    std::cerr << "catpart: " << f.message << "\n";
    return f.code;
  }
}
