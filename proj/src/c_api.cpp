#include "catpart/catpart.h"

#include "catpart/closed_form.hpp"
#include "catpart/counting.hpp"
#include "catpart/error.hpp"
#include "catpart/families.hpp"
#include "catpart/formats.hpp"
#include "catpart/trees.hpp"
#include "catpart/verify.hpp"

#include <cstring>
#include <new>
#include <string>

struct catpart_context {
  std::uint64_t cap = catpart::kDefaultEnumerationCap;
  std::string last_error;
};

struct catpart_partition {
  catpart::BoundedPartition value;
};

struct catpart_family {
  catpart::PartitionSet value;
};

struct catpart_pair {
  catpart::LabeledTreePair value;
};

struct catpart_forest {
  catpart::Forest value;
};

struct catpart_report {
  catpart::VerifyReport value;
};

namespace {

using namespace catpart;

catpart_status to_status(Errc code) {
  switch (code) {
    case Errc::invalid_argument: return CATPART_ERR_INVALID_ARGUMENT;
    case Errc::domain: return CATPART_ERR_DOMAIN;
    case Errc::cap_exceeded: return CATPART_ERR_CAP_EXCEEDED;
    case Errc::internal: return CATPART_ERR_INTERNAL;
  }
  return CATPART_ERR_INTERNAL;
}

// Runs body, translating every exception into a status plus context message.
template <typename Body>
catpart_status guarded(catpart_context* ctx, Body&& body) {
  if (ctx == nullptr) return CATPART_ERR_INVALID_ARGUMENT;
  ctx->last_error.clear();
  try {
    body();
    return CATPART_OK;
  } catch (const Error& e) {
    ctx->last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    ctx->last_error = "out of memory";
    return CATPART_ERR_ALLOC;
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return CATPART_ERR_INTERNAL;
  }
}

template <typename... Ptrs>
void require(const char* fn, const Ptrs*... ptrs) {
  if (((ptrs == nullptr) || ...)) throw catpart::invalid_argument(std::string(fn) + ": null argument");
}

char* duplicate(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Format to_format(catpart_format format) {
  switch (format) {
    case CATPART_FORMAT_TEXT: return Format::text;
    case CATPART_FORMAT_JSON: return Format::json;
    case CATPART_FORMAT_YOUNG_ASCII: return Format::young_ascii;
    case CATPART_FORMAT_DOT: return Format::dot;
  }
  throw catpart::invalid_argument("unknown format code " + std::to_string(static_cast<int>(format)));
}

catpart_partition* wrap(BoundedPartition mu) { return new catpart_partition{std::move(mu)}; }

}  // namespace

extern "C" {

catpart_context* catpart_context_create(void) { return new (std::nothrow) catpart_context(); }
void catpart_context_destroy(catpart_context* ctx) { delete ctx; }
void catpart_context_set_cap(catpart_context* ctx, uint64_t cap) {
  if (ctx != nullptr) ctx->cap = cap;
}
uint64_t catpart_context_cap(const catpart_context* ctx) { return ctx ? ctx->cap : kDefaultEnumerationCap; }
uint64_t catpart_default_cap(void) { return kDefaultEnumerationCap; }
const char* catpart_last_error(const catpart_context* ctx) { return ctx ? ctx->last_error.c_str() : ""; }

const char* catpart_status_name(catpart_status status) {
  switch (status) {
    case CATPART_OK: return "ok";
    case CATPART_ERR_INVALID_ARGUMENT: return "invalid argument";
    case CATPART_ERR_DOMAIN: return "outside domain";
    case CATPART_ERR_CAP_EXCEEDED: return "enumeration cap exceeded";
    case CATPART_ERR_INTERNAL: return "internal error";
    case CATPART_ERR_ALLOC: return "out of memory";
  }
  return "unknown status";
}

void catpart_string_free(char* s) { std::free(s); }

int catpart_format_parse(const char* name, catpart_format* out) {
  if (name == nullptr || out == nullptr) return 0;
  const auto format = parse_format(name);
  if (!format) return 0;
  switch (*format) {
    case Format::text: *out = CATPART_FORMAT_TEXT; break;
    case Format::json: *out = CATPART_FORMAT_JSON; break;
    case Format::young_ascii: *out = CATPART_FORMAT_YOUNG_ASCII; break;
    case Format::dot: *out = CATPART_FORMAT_DOT; break;
  }
  return 1;
}

catpart_status catpart_partition_parse(catpart_context* ctx, const char* text, int bound, catpart_partition** out) {
  return guarded(ctx, [&] {
    require("catpart_partition_parse", text, out);
    if (bound < 0) throw catpart::invalid_argument("bound must be nonnegative");
    *out = wrap(parse_partition_input(text, bound > 0 ? std::optional<int>(bound) : std::nullopt));
  });
}

catpart_status catpart_partition_parse_in_pnk(catpart_context* ctx, const char* text, int slack,
                                              catpart_partition** out) {
  return guarded(ctx, [&] {
    require("catpart_partition_parse_in_pnk", text, out);
    if (slack < 0) throw catpart::invalid_argument("slack must be nonnegative");
    const auto probe = parse_partition_input(text);
    *out = wrap(parse_partition_input(text, static_cast<int>(probe.size()) + slack));
  });
}

void catpart_partition_destroy(catpart_partition* mu) { delete mu; }
size_t catpart_partition_size(const catpart_partition* mu) { return mu ? mu->value.size() : 0; }
int catpart_partition_bound(const catpart_partition* mu) { return mu ? mu->value.bound() : 0; }
int catpart_partition_part(const catpart_partition* mu, size_t i) {
  if (mu == nullptr || i < 1 || i > mu->value.size()) return 0;
  return mu->value(i);
}
int catpart_partition_equal(const catpart_partition* a, const catpart_partition* b) {
  return a != nullptr && b != nullptr && a->value == b->value;
}
int catpart_partition_is_square(const catpart_partition* mu) { return mu != nullptr && is_square(mu->value); }

catpart_status catpart_partition_tau(catpart_context* ctx, const catpart_partition* mu, catpart_partition** out) {
  return guarded(ctx, [&] {
    require("catpart_partition_tau", mu, out);
    *out = wrap(tau(mu->value));
  });
}

catpart_status catpart_partition_render(catpart_context* ctx, const catpart_partition* mu, catpart_format format,
                                        char** out) {
  return guarded(ctx, [&] {
    require("catpart_partition_render", mu, out);
    *out = duplicate(render_partition(mu->value, to_format(format)));
  });
}

catpart_status catpart_square_witness(catpart_context* ctx, const catpart_partition* mu, int* b, int* k,
                                      catpart_partition** core) {
  return guarded(ctx, [&] {
    require("catpart_square_witness", mu, b, k, core);
    const auto w = find_square_core(mu->value);
    *b = w.b;
    *k = w.k;
    *core = wrap(w.core.value());
  });
}

catpart_status catpart_member_square(catpart_context* ctx, const catpart_partition* mu,
                                     const catpart_partition* core, int* member) {
  return guarded(ctx, [&] {
    require("catpart_member_square", mu, core, member);
    *member = member_square(mu->value, SquarePartition(core->value)) ? 1 : 0;
  });
}

catpart_status catpart_theta(catpart_context* ctx, const catpart_partition* mu, catpart_partition** out) {
  return guarded(ctx, [&] {
    require("catpart_theta", mu, out);
    *out = wrap(theta(mu->value));
  });
}

catpart_status catpart_mu_tilde(catpart_context* ctx, const catpart_partition* mu, int m, int* values) {
  return guarded(ctx, [&] {
    require("catpart_mu_tilde", mu, values);
    const auto mt = mu_tilde(mu->value, m);
    std::copy(mt.values.begin(), mt.values.end(), values);
  });
}

catpart_status catpart_member_omega(catpart_context* ctx, const catpart_partition* mu, int m, int* member) {
  return guarded(ctx, [&] {
    require("catpart_member_omega", mu, member);
    *member = member_omega(mu->value, m) ? 1 : 0;
  });
}

catpart_status catpart_family_square(catpart_context* ctx, const catpart_partition* core, int ell,
                                     catpart_family** out) {
  return guarded(ctx, [&] {
    require("catpart_family_square", core, out);
    const FamilyDescriptor family = SquareCoreFamily{SquarePartition(core->value), ell};
    *out = new catpart_family{generate(family, ctx->cap)};
  });
}

catpart_status catpart_family_omega(catpart_context* ctx, int m, int ell, catpart_family** out) {
  return guarded(ctx, [&] {
    require("catpart_family_omega", out);
    *out = new catpart_family{generate(OmegaFamily{m, ell}, ctx->cap)};
  });
}

void catpart_family_destroy(catpart_family* family) { delete family; }
size_t catpart_family_size(const catpart_family* family) { return family ? family->value.size() : 0; }

catpart_status catpart_family_render(catpart_context* ctx, const catpart_family* family, catpart_format format,
                                     char** out) {
  return guarded(ctx, [&] {
    require("catpart_family_render", family, out);
    *out = duplicate(render_family(family->value, to_format(format)));
  });
}

catpart_status catpart_pair_parse(catpart_context* ctx, const char* text, catpart_pair** out) {
  return guarded(ctx, [&] {
    require("catpart_pair_parse", text, out);
    const std::string_view body(text);
    if (body.find("digraph") != std::string_view::npos) {
      *out = new catpart_pair{parse_pair_dot(body)};
      return;
    }
    const auto shape = parse_pair_input(body);
    *out = new catpart_pair{label_pair(shape, static_cast<int>(shape.edge_count()) + 1)};
  });
}

catpart_status catpart_pair_from_partition(catpart_context* ctx, const catpart_partition* mu, catpart_pair** out) {
  return guarded(ctx, [&] {
    require("catpart_pair_from_partition", mu, out);
    *out = new catpart_pair{partition_to_pair(mu->value)};
  });
}

catpart_status catpart_pair_to_partition(catpart_context* ctx, const catpart_pair* pair, catpart_partition** out) {
  return guarded(ctx, [&] {
    require("catpart_pair_to_partition", pair, out);
    *out = wrap(labeled_pair_to_partition(pair->value));
  });
}

catpart_status catpart_pair_tau(catpart_context* ctx, const catpart_pair* pair, catpart_pair** out) {
  return guarded(ctx, [&] {
    require("catpart_pair_tau", pair, out);
    *out = new catpart_pair{tau_on_pair(pair->value)};
  });
}

void catpart_pair_destroy(catpart_pair* pair) { delete pair; }
int catpart_pair_equal(const catpart_pair* a, const catpart_pair* b) {
  return a != nullptr && b != nullptr && a->value == b->value;
}

catpart_status catpart_pair_render(catpart_context* ctx, const catpart_pair* pair, catpart_format format,
                                   char** out) {
  return guarded(ctx, [&] {
    require("catpart_pair_render", pair, out);
    *out = duplicate(render_pair(pair->value, to_format(format)));
  });
}

catpart_status catpart_forest_parse(catpart_context* ctx, const char* text, catpart_forest** out) {
  return guarded(ctx, [&] {
    require("catpart_forest_parse", text, out);
    *out = new catpart_forest{parse_forest_input(text)};
  });
}

catpart_status catpart_forest_from_partition(catpart_context* ctx, const catpart_partition* mu, int m,
                                             catpart_forest** out) {
  return guarded(ctx, [&] {
    require("catpart_forest_from_partition", mu, out);
    *out = new catpart_forest{partition_to_forest(mu->value, m)};
  });
}

catpart_status catpart_forest_to_partition(catpart_context* ctx, const catpart_forest* forest,
                                           catpart_partition** out) {
  return guarded(ctx, [&] {
    require("catpart_forest_to_partition", forest, out);
    *out = wrap(forest_to_partition(forest->value, forest->value.m()));
  });
}

void catpart_forest_destroy(catpart_forest* forest) { delete forest; }
int catpart_forest_slots(const catpart_forest* forest) { return forest ? forest->value.m() : 0; }
int catpart_forest_equal(const catpart_forest* a, const catpart_forest* b) {
  return a != nullptr && b != nullptr && a->value == b->value;
}

catpart_status catpart_forest_render(catpart_context* ctx, const catpart_forest* forest, catpart_format format,
                                     char** out) {
  return guarded(ctx, [&] {
    require("catpart_forest_render", forest, out);
    *out = duplicate(render_forest(forest->value, to_format(format)));
  });
}

catpart_status catpart_forest_render_decomposition(catpart_context* ctx, const catpart_forest* forest,
                                                   catpart_format format, char** out) {
  return guarded(ctx, [&] {
    require("catpart_forest_render_decomposition", forest, out);
    *out = duplicate(render_decomposition(label_forest(forest->value), to_format(format)));
  });
}

catpart_status catpart_count_binomial(catpart_context* ctx, long n, long r, char** out) {
  return guarded(ctx, [&] {
    require("catpart_count_binomial", out);
    *out = duplicate(counting::to_decimal(counting::binomial(n, r)));
  });
}

catpart_status catpart_count_catalan(catpart_context* ctx, long n, char** out) {
  return guarded(ctx, [&] {
    require("catpart_count_catalan", out);
    *out = duplicate(counting::to_decimal(counting::catalan(n)));
  });
}

catpart_status catpart_count_ballot(catpart_context* ctx, long ell, long m, char** out) {
  return guarded(ctx, [&] {
    require("catpart_count_ballot", out);
    *out = duplicate(counting::to_decimal(counting::ballot(ell, m)));
  });
}

catpart_status catpart_count_generalized_catalan(catpart_context* ctx, long k, long gamma, long n, char** out) {
  return guarded(ctx, [&] {
    require("catpart_count_generalized_catalan", out);
    *out = duplicate(counting::to_decimal(counting::generalized_catalan(k, gamma, n)));
  });
}

catpart_status catpart_verify(catpart_context* ctx, int max_parts, int max_m, const char* mutation,
                              catpart_report** out) {
  return guarded(ctx, [&] {
    require("catpart_verify", out);
    VerifyOptions options;
    options.max_parts = max_parts;
    options.max_m = max_m;
    options.cap = ctx->cap;
    if (mutation != nullptr) options.mutation = mutation;
    *out = new catpart_report{run_verify(options)};
  });
}

void catpart_report_destroy(catpart_report* report) { delete report; }
int catpart_report_passed(const catpart_report* report) { return report != nullptr && report->value.passed(); }
size_t catpart_report_suite_count(const catpart_report* report) { return report ? report->value.suites.size() : 0; }
const char* catpart_report_suite_name(const catpart_report* report, size_t i) {
  if (report == nullptr || i >= report->value.suites.size()) return nullptr;
  return report->value.suites[i].name.c_str();
}

catpart_status catpart_report_render(catpart_context* ctx, const catpart_report* report, catpart_format format,
                                     char** out) {
  return guarded(ctx, [&] {
    require("catpart_report_render", report, out);
    const auto f = to_format(format);
    if (f != Format::text && f != Format::json) {
      throw catpart::invalid_argument("verify reports render only as text or json");
    }
    *out = duplicate(f == Format::json ? report->value.to_json() : report->value.to_text());
  });
}

}  // extern "C"
