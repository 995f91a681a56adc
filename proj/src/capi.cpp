#include "fgc.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

#include "fgc/bordification.hpp"
#include "fgc/chords.hpp"
#include "fgc/linalg.hpp"
#include "fgc/morita.hpp"
#include "fgc/randomgen.hpp"
#include "fgc/textio.hpp"
#include "fgc/trace.hpp"

struct fgc_graph {
  fgc::ParsedGraph pg;
};
struct fgc_chain {
  fgc::Chain chain;
};

namespace {

char* dupString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename F>
fgc_status guarded(F&& f) {
  try {
    return f();
  } catch (const std::invalid_argument&) {
    return FGC_ERR_INVALID;
  } catch (const std::exception&) {
    return FGC_ERR_UNSUPPORTED;
  }
}

}  // namespace

extern "C" {

const char* fgc_status_str(fgc_status s) {
  switch (s) {
    case FGC_OK: return "ok";
    case FGC_ERR_PARSE: return "parse error";
    case FGC_ERR_INVALID: return "invalid input";
    case FGC_ERR_CHECK: return "verification mismatch";
    case FGC_ERR_IO: return "io error";
    case FGC_ERR_UNSUPPORTED: return "unsupported";
  }
  return "unknown";
}

void fgc_string_free(char* s) { std::free(s); }

fgc_status fgc_graph_parse(const char* text, fgc_graph** out) {
  if (!text || !out) return FGC_ERR_INVALID;
  try {
    auto pg = fgc::parseGraphText(text);
    *out = new fgc_graph{std::move(pg)};
    return FGC_OK;
  } catch (const std::exception&) {
    return FGC_ERR_PARSE;
  }
}

fgc_status fgc_graph_read(const char* path, fgc_graph** out) {
  if (!path || !out) return FGC_ERR_INVALID;
  std::ifstream in(path);
  if (!in) return FGC_ERR_IO;
  std::ostringstream ss;
  ss << in.rdbuf();
  return fgc_graph_parse(ss.str().c_str(), out);
}

void fgc_graph_free(fgc_graph* g) { delete g; }
void fgc_chain_free(fgc_chain* c) { delete c; }

fgc_status fgc_chain_text(const fgc_chain* c, char** out) {
  if (!c || !out) return FGC_ERR_INVALID;
  *out = dupString(fgc::chainText(c->chain));
  return FGC_OK;
}

fgc_status fgc_chain_is_zero(const fgc_chain* c, int* out) {
  if (!c || !out) return FGC_ERR_INVALID;
  *out = c->chain.isZero() ? 1 : 0;
  return FGC_OK;
}

fgc_status fgc_chain_term_count(const fgc_chain* c, long* out) {
  if (!c || !out) return FGC_ERR_INVALID;
  *out = static_cast<long>(c->chain.terms.size());
  return FGC_OK;
}

fgc_status fgc_normalize(const fgc_graph* g, fgc_chain** out) {
  if (!g || !out) return FGC_ERR_INVALID;
  return guarded([&] {
    const auto& [graph, d] = g->pg;
    fgc::Chain c;
    if (d.hasForest)
      c = fgc::normalizeForested({graph, d.forest});
    else if (d.hasFiltration)
      c = fgc::normalizeFiltered({graph, d.filtration, d.edgeOrder});
    else if (d.hasHalfOrders)
      c = fgc::normalizeOdd({graph, d.vertexType, d.halfOrders});
    else
      c = fgc::Chain::single(fgc::canonicalize(graph, d).key, 1);
    *out = new fgc_chain{std::move(c)};
    return FGC_OK;
  });
}

fgc_status fgc_boundary(const fgc_graph* g, fgc_chain** out) {
  if (!g || !out) return FGC_ERR_INVALID;
  return guarded([&] {
    const auto& [graph, d] = g->pg;
    if (!d.hasForest) return FGC_ERR_UNSUPPORTED;
    *out = new fgc_chain{fgc::boundaryOf({graph, d.forest})};
    return FGC_OK;
  });
}

fgc_status fgc_trace(const fgc_graph* g, int ab_variant, fgc_chain** out) {
  if (!g || !out) return FGC_ERR_INVALID;
  return guarded([&] {
    const auto& [graph, d] = g->pg;
    if (!d.hasForest) return FGC_ERR_UNSUPPORTED;
    *out = new fgc_chain{fgc::graphicalTrace({graph, d.forest}, ab_variant != 0)};
    return FGC_OK;
  });
}

fgc_status fgc_phi(const fgc_graph* g, fgc_chain** out) {
  if (!g || !out) return FGC_ERR_INVALID;
  return guarded([&] {
    const auto& [graph, d] = g->pg;
    if (!d.hasHalfOrders) return FGC_ERR_UNSUPPORTED;
    *out = new fgc_chain{fgc::phi({graph, d.vertexType, d.halfOrders})};
    return FGC_OK;
  });
}

fgc_status fgc_phi_degree(const fgc_graph* g, long* out) {
  if (!g || !out) return FGC_ERR_INVALID;
  return guarded([&] {
    const auto& [graph, d] = g->pg;
    if (!d.hasHalfOrders) return FGC_ERR_UNSUPPORTED;
    *out = fgc::phiDegree({graph, d.vertexType, d.halfOrders});
    return FGC_OK;
  });
}

fgc_status fgc_bordification_d(const fgc_graph* g, fgc_chain** out) {
  if (!g || !out) return FGC_ERR_INVALID;
  return guarded([&] {
    const auto& [graph, d] = g->pg;
    if (!d.hasFiltration) return FGC_ERR_UNSUPPORTED;
    fgc::Chain n = fgc::normalizeFiltered({graph, d.filtration, d.edgeOrder});
    *out = new fgc_chain{fgc::dTotal(n)};
    return FGC_OK;
  });
}

fgc_status fgc_chords_enumerate(int rank, char** out) {
  if (!out) return FGC_ERR_INVALID;
  return guarded([&] {
    std::string lines;
    for (const auto& key : fgc::enumerateChordDiagrams(rank)) {
      fgc::ChordDiagram d = fgc::presentationOf(key);
      for (auto [a, b] : d.chords)
        lines += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
      lines += "\n";
    }
    *out = dupString(lines);
    return FGC_OK;
  });
}

fgc_status fgc_chords_relations(int rank, long* out_count, long* out_rank) {
  if (!out_count || !out_rank) return FGC_ERR_INVALID;
  return guarded([&] {
    auto rel = fgc::slidingRelations(rank);
    fgc::ColumnIndex cols;
    *out_count = static_cast<long>(rel.size());
    *out_rank = fgc::rank(fgc::matrixFromChains(rel, cols));
    return FGC_OK;
  });
}

fgc_status fgc_matrix_rank_file(const char* path, long* out_rank) {
  if (!path || !out_rank) return FGC_ERR_INVALID;
  std::ifstream in(path);
  if (!in) return FGC_ERR_IO;
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    auto m = fgc::parseMatrixText(ss.str());
    *out_rank = fgc::rank(m);
    return FGC_OK;
  } catch (const std::exception&) {
    return FGC_ERR_PARSE;
  }
}

fgc_status fgc_verify(const char* which, const char* cert_dir, int threads, char** out_report,
                      int* out_all_pass) {
  if (!which || !out_report) return FGC_ERR_INVALID;
  return guarded([&] {
    fgc::VerificationReport rep;
    std::string w = which;
    fgc::CertificateOptions cert;
    if (cert_dir) cert.path = cert_dir;
    if (w == "mu3")
      rep = fgc::verifyMu3();
    else if (w == "mu5")
      rep = fgc::verifyMu5(cert, threads > 0 ? threads : 1);
    else if (w == "h9")
      rep = fgc::verifyH9(threads > 0 ? threads : 1);
    else
      return FGC_ERR_INVALID;
    *out_report = dupString(rep.kv());
    if (out_all_pass) *out_all_pass = rep.allPass() ? 1 : 0;
    return rep.allPass() ? FGC_OK : FGC_ERR_CHECK;
  });
}

fgc_status fgc_selftest(unsigned long long seed, char** out_report, int* out_all_pass) {
  if (!out_report) return FGC_ERR_INVALID;
  return guarded([&] {
    fgc::VerificationReport rep;
    rep.title = "randomized property suites";
    fgc::Rng rng(seed);

    int traceFail = 0, ddFail = 0;
    for (int i = 0; i < 1000; ++i) {
      int rank = 2 + static_cast<int>(rng() % 5);
      fgc::ForestedGraph fg = fgc::randomForestedGraph(rank, rng);
      if (!fgc::graphicalTraceChain(fgc::boundaryOf(fg)).isZero()) traceFail++;
    }
    rep.expectInt("trace_of_boundary_nonzero_cases", 0, traceFail);
    for (int i = 0; i < 500; ++i) {
      int rank = 2 + static_cast<int>(rng() % 5);
      fgc::ForestedGraph fg = fgc::randomForestedGraph(rank, rng);
      if (!fgc::boundary(fgc::boundaryOf(fg)).isZero()) ddFail++;
    }
    rep.expectInt("boundary_squared_nonzero_cases", 0, ddFail);

    int bordFail = 0;
    for (int i = 0; i < 200; ++i) {
      fgc::FilteredGraph fg = fgc::randomFilteredGraph(4, rng);
      fgc::Chain n = fgc::normalizeFiltered(fg);
      if (!fgc::dTotal(fgc::dTotal(n)).isZero()) bordFail++;
    }
    rep.expectInt("bordification_dd_nonzero_cases", 0, bordFail);

    auto theta3 = fgc::buildThetaK(3);
    rep.expect("blowup_theta3", "4",
               fgc::Rat(fgc::mu(fgc::normalizeForested(fgc::blowup(theta3)), theta3)).get_str());

    *out_report = dupString(rep.kv());
    if (out_all_pass) *out_all_pass = rep.allPass() ? 1 : 0;
    return rep.allPass() ? FGC_OK : FGC_ERR_CHECK;
  });
}

}  // extern "C"
