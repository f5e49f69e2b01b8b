#include "tightpath/tightpath.h"

#include <cstring>
#include <new>
#include <string>

#include "bounds.hpp"
#include "constructions.hpp"
#include "extension.hpp"
#include "io.hpp"
#include "patterns.hpp"
#include "search.hpp"

struct tp_hypergraph {
  tightpath::Hypergraph value;
};

struct tp_witness {
  tightpath::PathWitness value;
  std::vector<int32_t> sequence;
};

namespace {

using namespace tightpath;

thread_local std::string last_error;

tp_status status_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::domain: return TP_ERR_DOMAIN;
    case ErrorKind::unsupported_pattern: return TP_ERR_UNSUPPORTED;
    case ErrorKind::stuck_end: return TP_ERR_STUCK_END;
    case ErrorKind::parse: return TP_ERR_PARSE;
    case ErrorKind::io: return TP_ERR_IO;
  }
  return TP_ERR_INTERNAL;
}

template <typename F>
tp_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return TP_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return TP_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return TP_ERR_INTERNAL;
  }
}

void need(const void* p, const char* name) {
  if (p == nullptr) throw std::invalid_argument(std::string(name) + " must not be null");
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

tp_hypergraph* wrap(Hypergraph h) { return new tp_hypergraph{std::move(h)}; }

PatternKind kind_of(tp_pattern p) {
  switch (p) {
    case TP_TIGHT_PATH: return PatternKind::tight_path;
    case TP_ZIGZAG: return PatternKind::zigzag;
    case TP_STACK: return PatternKind::stack;
    case TP_GOOD_PATH: return PatternKind::good_path;
  }
  fail(ErrorKind::domain, "unknown pattern code " + std::to_string(static_cast<int>(p)));
}

}  // namespace

extern "C" {

const char* tp_last_error(void) { return last_error.c_str(); }

const char* tp_status_name(tp_status status) {
  switch (status) {
    case TP_OK: return "ok";
    case TP_ERR_DOMAIN: return "domain";
    case TP_ERR_UNSUPPORTED: return "unsupported_pattern";
    case TP_ERR_STUCK_END: return "stuck_end";
    case TP_ERR_PARSE: return "parse";
    case TP_ERR_IO: return "io";
    case TP_ERR_INTERNAL: return "internal";
    case TP_ERR_NULL_ARGUMENT: return "null_argument";
  }
  return "unknown";
}

void tp_string_free(char* s) { delete[] s; }

tp_status tp_pattern_from_name(const char* name, tp_pattern* out) {
  if (name == nullptr || out == nullptr) return TP_ERR_NULL_ARGUMENT;
  return guarded([&] {
    switch (pattern_kind_from_string(name)) {
      case PatternKind::tight_path: *out = TP_TIGHT_PATH; break;
      case PatternKind::zigzag: *out = TP_ZIGZAG; break;
      case PatternKind::stack: *out = TP_STACK; break;
      case PatternKind::good_path: *out = TP_GOOD_PATH; break;
    }
  });
}

tp_status tp_hypergraph_create(int n, int r, int geometric, const int32_t* vertices,
                               size_t edge_count, tp_hypergraph** out) {
  if (out == nullptr || (vertices == nullptr && edge_count > 0)) return TP_ERR_NULL_ARGUMENT;
  return guarded([&] {
    require(r >= 1, ErrorKind::domain, "r must be positive");
    std::vector<Edge> edges;
    edges.reserve(edge_count);
    for (size_t i = 0; i < edge_count; ++i) {
      std::vector<Vertex> e(vertices + i * r, vertices + (i + 1) * r);
      for (Vertex v : e) {
        require(v >= 0 && v < n, ErrorKind::domain, "vertex " + std::to_string(v) + " out of range");
      }
      edges.emplace_back(std::span<const Vertex>(e));
    }
    *out = wrap(Hypergraph(n, r, geometric != 0, std::move(edges)));
  });
}

tp_status tp_hypergraph_parse(const char* text, tp_hypergraph** out) {
  if (text == nullptr || out == nullptr) return TP_ERR_NULL_ARGUMENT;
  return guarded([&] { *out = wrap(parse_hypergraph(text)); });
}

tp_status tp_hypergraph_read_file(const char* path, tp_hypergraph** out) {
  if (path == nullptr || out == nullptr) return TP_ERR_NULL_ARGUMENT;
  return guarded([&] { *out = wrap(read_hypergraph_file(path)); });
}

tp_status tp_hypergraph_write_file(const tp_hypergraph* h, const char* path) {
  if (h == nullptr || path == nullptr) return TP_ERR_NULL_ARGUMENT;
  return guarded([&] { write_hypergraph_file(h->value, path); });
}

tp_status tp_hypergraph_to_text(const tp_hypergraph* h, char** out) {
  if (h == nullptr || out == nullptr) return TP_ERR_NULL_ARGUMENT;
  return guarded([&] { *out = copy_string(to_text(h->value)); });
}

tp_status tp_hypergraph_to_json(const tp_hypergraph* h, char** out) {
  if (h == nullptr || out == nullptr) return TP_ERR_NULL_ARGUMENT;
  return guarded([&] { *out = copy_string(to_json(h->value).dump()); });
}

void tp_hypergraph_free(tp_hypergraph* h) { delete h; }

int tp_hypergraph_n(const tp_hypergraph* h) { return h ? h->value.n() : -1; }
int tp_hypergraph_r(const tp_hypergraph* h) { return h ? h->value.r() : -1; }
int tp_hypergraph_geometric(const tp_hypergraph* h) { return h ? h->value.geometric() : 0; }
size_t tp_hypergraph_edge_count(const tp_hypergraph* h) { return h ? h->value.size() : 0; }

tp_status tp_hypergraph_edge(const tp_hypergraph* h, size_t index, int32_t* out) {
  if (h == nullptr || out == nullptr) return TP_ERR_NULL_ARGUMENT;
  return guarded([&] {
    require(index < h->value.size(), ErrorKind::domain, "edge index out of range");
    int i = 0;
    for (Vertex v : h->value.edges()[index].vertices()) out[i++] = v;
  });
}

tp_status tp_hypergraph_shadow(const tp_hypergraph* h, tp_hypergraph** out) {
  if (h == nullptr || out == nullptr) return TP_ERR_NULL_ARGUMENT;
  return guarded([&] { *out = wrap(shadow(h->value)); });
}

tp_status tp_hypergraph_link(const tp_hypergraph* h, int vertex, tp_hypergraph** out) {
  if (h == nullptr || out == nullptr) return TP_ERR_NULL_ARGUMENT;
  return guarded([&] { *out = wrap(link(h->value, vertex)); });
}

tp_status tp_construct(tp_family family, int n, int r, int k, tp_hypergraph** out) {
  if (out == nullptr) return TP_ERR_NULL_ARGUMENT;
  return guarded([&] {
    switch (family) {
      case TP_FAMILY_STACK_FREE: *out = wrap(stack_free(n, r, k)); return;
      case TP_FAMILY_SHORT_SIDE: *out = wrap(short_side(n, r, k)); return;
      case TP_FAMILY_CLIQUE_UNION: *out = wrap(clique_union(n, k)); return;
      case TP_FAMILY_TRANSVERSAL: *out = wrap(transversal_blocks(n, r, k)); return;
    }
    fail(ErrorKind::domain, "unknown family code " + std::to_string(static_cast<int>(family)));
  });
}

tp_status tp_lift_plus(const tp_hypergraph* h, int m, tp_hypergraph** out) {
  if (h == nullptr || out == nullptr) return TP_ERR_NULL_ARGUMENT;
  return guarded([&] { *out = wrap(lift_plus(h->value, m)); });
}

tp_status tp_find_pattern(const tp_hypergraph* h, tp_pattern pattern, int k, tp_witness** out) {
  if (h == nullptr || out == nullptr) return TP_ERR_NULL_ARGUMENT;
  return guarded([&] {
    *out = nullptr;
    auto found = find_pattern(h->value, kind_of(pattern), k);
    if (!found) return;
    std::vector<int32_t> seq(found->sequence.begin(), found->sequence.end());
    *out = new tp_witness{std::move(*found), std::move(seq)};
  });
}

int tp_witness_k(const tp_witness* w) { return w ? w->value.k : 0; }
size_t tp_witness_length(const tp_witness* w) { return w ? w->sequence.size() : 0; }
const int32_t* tp_witness_sequence(const tp_witness* w) { return w ? w->sequence.data() : nullptr; }

tp_status tp_witness_to_json(const tp_witness* w, char** out) {
  if (w == nullptr || out == nullptr) return TP_ERR_NULL_ARGUMENT;
  return guarded([&] { *out = copy_string(to_json(w->value).dump()); });
}

void tp_witness_free(tp_witness* w) { delete w; }

tp_status tp_is_zigzag(int n, const int32_t* sequence, size_t length, int r, int* out) {
  if (out == nullptr || (sequence == nullptr && length > 0)) return TP_ERR_NULL_ARGUMENT;
  return guarded([&] {
    std::vector<Vertex> seq(sequence, sequence + length);
    *out = is_zigzag_sequence(CyclicGround(n), seq, r) ? 1 : 0;
  });
}

tp_status tp_bound_table(int n, int r, int k, char** out_json) {
  if (out_json == nullptr) return TP_ERR_NULL_ARGUMENT;
  return guarded([&] { *out_json = copy_string(bound_table(n, r, k).dump()); });
}

tp_status tp_evaluate_bound(const char* kind, int n, int r, int k, double* out) {
  if (kind == nullptr || out == nullptr) return TP_ERR_NULL_ARGUMENT;
  return guarded([&] { *out = evaluate_bound(bound_kind_from_string(kind), n, r, k).approx(); });
}

tp_status tp_search(int n, int r, int k, tp_pattern pattern, int geometric,
                    const tp_search_options* options, int* out_value, int* out_exhaustive,
                    tp_hypergraph** out_witness, char** out_json) {
  return guarded([&] {
    SearchOptions opts;
    if (options != nullptr) {
      opts.budget = options->budget;
      opts.threads = options->threads > 0 ? options->threads : 1;
    }
    const SearchResult res = exact_extremal(n, r, k, kind_of(pattern), geometric != 0, opts);
    if (out_value) *out_value = res.value;
    if (out_exhaustive) *out_exhaustive = res.certificate == Certificate::exhaustive;
    if (out_json) *out_json = copy_string(to_json(res).dump());
    if (out_witness) *out_witness = wrap(res.witness);
  });
}

tp_status tp_verify_family(const tp_hypergraph* h, tp_pattern pattern, int k, int* out_free,
                           char** out_json) {
  if (h == nullptr) return TP_ERR_NULL_ARGUMENT;
  return guarded([&] {
    const FamilyCertificate cert = verify_family(h->value, kind_of(pattern), k);
    if (out_free) *out_free = cert.free;
    if (out_json) *out_json = copy_string(to_json(cert).dump());
  });
}

tp_status tp_verify_counting(const tp_hypergraph* h, int k_max, int good_path,
                             const int32_t* block_of, int blocks, int* out_violations,
                             char** out_json) {
  if (h == nullptr || (good_path && block_of == nullptr)) return TP_ERR_NULL_ARGUMENT;
  return guarded([&] {
    std::shared_ptr<const BlockColoring> coloring;
    if (good_path) {
      const int n = h->value.n();
      coloring = std::make_shared<BlockColoring>(n, blocks,
                                                 std::vector<int>(block_of, block_of + n));
    }
    const CountingReport report = verify_counting(
        h->value, k_max, good_path ? EndMode::good_path : EndMode::zigzag, coloring);
    if (out_violations) *out_violations = static_cast<int>(report.violations());
    if (out_json) *out_json = copy_string(to_json(report).dump());
  });
}

tp_status tp_experiment(const tp_hypergraph* h, uint64_t seed, long long trials,
                        char** out_json) {
  if (h == nullptr || out_json == nullptr) return TP_ERR_NULL_ARGUMENT;
  return guarded([&] {
    *out_json = copy_string(to_json(random_partition_experiment(h->value, seed, trials)).dump());
  });
}

}  // extern "C"
