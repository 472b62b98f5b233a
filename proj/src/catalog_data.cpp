#include <string_view>

namespace inducibility::detail {

// Bundled catalogue. Quantum targets use G(n: a-b, ...) with vertices 1..n.
extern const std::string_view kCatalogJson = R"json([
  {"id": "exoo4.K4", "group": "exoo4", "kind": "repetitive", "construction": "loopK1", "quantum": "K4", "t": 4, "expected": "1"},
  {"id": "exoo4.S4", "group": "exoo4", "kind": "repetitive", "construction": "K2", "quantum": "S4", "t": 4, "expected": "1/2"},
  {"id": "exoo4.C4", "group": "exoo4", "kind": "repetitive", "construction": "K2", "quantum": "C4", "t": 4, "expected": "3/8"},
  {"id": "exoo4.V4", "group": "exoo4", "kind": "repetitive", "construction": "M4", "quantum": "V4", "t": 4, "expected": "3/8"},
  {"id": "exoo4.D4", "group": "exoo4", "kind": "repetitive", "construction": "K5", "quantum": "D4", "t": 4, "expected": "72/125"},

  {"id": "headline.thomason144", "group": "headline", "kind": "repetitive", "construction": "tensor(M4, K4, tensor(K3, K3))", "quantum": "K4+A4", "t": 4, "expected": "11411/373248"},
  {"id": "headline.thomasonG18", "group": "headline", "kind": "repetitive", "construction": "tensor(M4, K4, compose(tensor(K3, K3), K2))", "quantum": "K4+A4", "t": 4, "expected": "3769/124416"},
  {"id": "headline.limitK4A4", "group": "headline", "kind": "limit", "factors": ["M4", "K4"], "construction": "tensor(K3, K3)", "quantum": "K4+A4", "t": 4, "expected": "1411/46592"},
  {"id": "headline.limitP4", "group": "headline", "kind": "limit", "factors": ["K4"], "construction": "tensor(K3, K3)", "quantum": "P4", "t": 4, "expected": "1173/5824"},
  {"id": "headline.nestedC5.P4", "group": "headline", "kind": "nested", "construction": "C5", "quantum": "P4", "t": 4, "expected": "6/31"},
  {"id": "headline.nestedPaley17.P4", "group": "headline", "kind": "nested", "construction": "paley(17)", "quantum": "P4", "t": 4, "expected": "60/307"},
  {"id": "headline.nestedC5.C5", "group": "headline", "kind": "nested", "construction": "C5", "quantum": "C5", "t": 5, "expected": "1/26"},

  {"id": "appendix5.row01", "group": "appendix5", "kind": "repetitive", "construction": "A1", "quantum": "A5", "t": 5, "expected": "1"},
  {"id": "appendix5.row02", "group": "appendix5", "kind": "repetitive", "construction": "union(loopK1:1, loopK1:1)", "quantum": "G(5: 2-3, 2-4, 3-4, 1-5)", "t": 5, "expected": "5/8"},
  {"id": "appendix5.row03", "group": "appendix5", "kind": "repetitive", "construction": "union(loopK1:1, loopK1:1, loopK1:1)", "quantum": "G(5: 2-5, 1-4)", "t": 5, "expected": "10/27"},
  {"id": "appendix5.row04", "group": "appendix5", "kind": "repetitive", "construction": "union(loopK1:1, loopK1:1, loopK1:1, loopK1:1, loopK1:1, loopK1:1, loopK1:1, loopK1:1)", "quantum": "G(5: 1-5)", "t": 5, "expected": "0.5126953125", "tolerance": 1e-9},
  {"id": "appendix5.row05", "group": "appendix5", "kind": "repetitive", "construction": "union(K3:1, K3:1)", "quantum": "G(5: 1-5, 2-3, 3-4)", "t": 5, "expected": "5/18"},
  {"id": "appendix5.row06", "group": "appendix5", "kind": "repetitive", "construction": "C5", "quantum": "G(5: 5-1, 1-2, 2-4, 2-3)", "t": 5, "expected": "24/125"},
  {"id": "appendix5.row07", "group": "appendix5", "kind": "repetitive", "construction": "union(loopK1:3, K1:2)", "quantum": "G(5: 1-5, 1-3, 5-3)", "t": 5, "expected": "216/625"},
  {"id": "appendix5.row08", "group": "appendix5", "kind": "repetitive", "construction": "union(K2:1, K2:2, K2:2)", "quantum": "G(5: 3-5, 3-1)", "t": 5, "expected": "0.2784", "tolerance": 1e-9},
  {"id": "appendix5.row09", "group": "appendix5", "kind": "repetitive", "construction": "union(loopK1:1, loopK1:alpha)", "quantum": "G(5: 1-2, 1-5, 2-5, 1-4, 2-4, 5-4)", "t": 5, "expected": "5/12", "tolerance": 1e-9, "approximate": true},
  {"id": "appendix5.row10", "group": "appendix5", "kind": "repetitive", "construction": "union(K2:1, K2:alpha)", "quantum": "G(5: 3-2, 1-3, 3-5)", "t": 5, "expected": "5/24", "tolerance": 1e-9, "approximate": true},
  {"id": "appendix5.row11", "group": "appendix5", "kind": "repetitive", "construction": "union(K2:1, K2:alpha)", "quantum": "G(5: 5-2, 2-4, 1-4, 5-1)", "t": 5, "expected": "5/32", "tolerance": 1e-9, "approximate": true},
  {"id": "appendix5.row12", "group": "appendix5", "kind": "repetitive", "construction": "union(complement(union(K2:1, K2:1)):1, complement(union(K2:1, K2:1)):alpha)", "quantum": "G(5: 1-5, 1-3, 5-3, 1-4)", "t": 5, "expected": "0.15625", "tolerance": 1e-9, "approximate": true},
  {"id": "appendix5.row13", "group": "appendix5", "kind": "repetitive", "construction": "union(K5:1, K5:alpha)", "quantum": "G(5: 1-2, 2-5, 1-4, 2-4, 5-4)", "t": 5, "expected": "0.24", "tolerance": 1e-9, "approximate": true},
  {"id": "appendix5.row14", "group": "appendix5", "kind": "nested", "construction": "C5", "quantum": "C5", "t": 5, "expected": "1/26"},
  {"id": "appendix5.row15", "group": "appendix5", "kind": "repetitive", "construction": "bipartite(5/6)", "quantum": "G(5: 1-2, 2-4, 4-5, 5-1, 2-3)", "t": 5, "expected": "15625/62208"},
  {"id": "appendix5.row16", "group": "appendix5", "kind": "repetitive", "construction": "bernoulli(3/10)", "quantum": "G(5: 2-5, 1-4, 2-4)", "t": 5, "expected": "0.133413966", "tolerance": 1e-9},
  {"id": "appendix5.row17", "group": "appendix5", "kind": "nested", "construction": "tensor(K3, K3, K2)", "quantum": "G(5: 1-2, 2-3, 2-4, 3-4, 4-5, 1-5)", "t": 5, "expected": "1968/20995"},
  {"id": "appendix5.row18", "group": "appendix5", "kind": "nested", "construction": "tensor(K3, K3)", "quantum": "bull", "t": 5, "expected": "813/11111"}
])json";

}  // namespace inducibility::detail
