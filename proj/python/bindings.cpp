#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "p3t/bounds.hpp"
#include "p3t/conflict.hpp"
#include "p3t/embed.hpp"
#include "p3t/family.hpp"
#include "p3t/iso.hpp"
#include "p3t/verify.hpp"

namespace py = pybind11;
using namespace p3t;

namespace {

using XY = std::pair<std::int64_t, std::int64_t>;

Point to_point(const XY& p) { return {p.first, p.second}; }
XY to_xy(Point p) { return {p.x, p.y}; }

std::vector<Point> to_points(const std::vector<XY>& pts) {
  std::vector<Point> out;
  out.reserve(pts.size());
  for (const XY& p : pts) out.push_back(to_point(p));
  return out;
}

std::vector<XY> to_xys(const std::vector<Point>& pts) {
  std::vector<XY> out;
  out.reserve(pts.size());
  for (Point p : pts) out.push_back(to_xy(p));
  return out;
}

Triangle to_triangle(const std::array<XY, 3>& t) {
  return {to_point(t[0]), to_point(t[1]), to_point(t[2])};
}

const GadgetCatalog& catalog_at(const std::string& path) {
  static std::map<std::string, GadgetCatalog> cache;
  auto it = cache.find(path);
  if (it == cache.end()) it = cache.emplace(path, load_catalog(path)).first;
  return it->second;
}

std::string resolve(const std::optional<std::string>& path) {
  return path ? *path : default_catalog_path();
}

py::object loads(const std::string& text) { return py::module_::import("json").attr("loads")(text); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Planar 3-trees, universal point sets and the conflict-family bounds";

  py::register_exception<GeometryError>(m, "GeometryError", PyExc_ValueError);
  py::register_exception<TriTreeError>(m, "TriTreeError", PyExc_ValueError);
  py::register_exception<EmbedError>(m, "EmbedError", PyExc_ValueError);
  py::register_exception<FamilyError>(m, "FamilyError", PyExc_ValueError);
  py::register_exception<CatalogError>(m, "CatalogError", PyExc_ValueError);
  py::register_exception<PointSetError>(m, "PointSetError", PyExc_ValueError);

  m.def("orient", [](XY p, XY q, XY r) { return static_cast<int>(orient(to_point(p), to_point(q), to_point(r))); });
  m.def("strictly_inside", [](XY p, std::array<XY, 3> t) { return strictly_inside(to_point(p), to_triangle(t)); });
  m.def("hull_triangle", [](const std::vector<XY>& pts) -> std::optional<std::array<XY, 3>> {
    const auto h = hull_triangle(to_points(pts));
    if (!h) return std::nullopt;
    return std::array<XY, 3>{to_xy((*h)[0]), to_xy((*h)[1]), to_xy((*h)[2])};
  });
  m.def("general_position", [](const std::vector<XY>& pts) { return general_position(to_points(pts)); });
  m.def("segments_cross", [](XY a, XY b, XY c, XY d) {
    return segments_cross({to_point(a), to_point(b)}, {to_point(c), to_point(d)});
  });

  py::class_<TriTree>(m, "TriTree")
      .def_static("new_root", &TriTree::new_root, py::arg("labels") = std::array<std::string, 3>{"a", "b", "c"})
      .def_static("parse", &parse_stacking_text)
      .def("stack", &TriTree::stack, py::arg("face"), py::arg("label") = "")
      .def_property_readonly("size", &TriTree::size)
      .def_property_readonly("labels", &TriTree::labels)
      .def("faces", &TriTree::faces)
      .def("inner_faces", &TriTree::inner_faces)
      .def("adjacency", &TriTree::adjacency)
      .def("edge_count", &TriTree::edge_count)
      .def("program", [](const TriTree& t) {
        std::vector<std::pair<VertexId, Face>> out;
        for (const StackStep& s : t.program()) out.emplace_back(s.vertex, s.parent);
        return out;
      })
      .def("to_text", &to_stacking_text)
      .def("__len__", &TriTree::size)
      .def("__eq__", [](const TriTree& a, const TriTree& b) { return a == b; });

  m.def("recognize", [](const Adjacency& adj, Face outer) {
    Recognition r = recognize(adj, outer);
    return py::make_tuple(r.tree, r.original);
  });
  m.def("face_tree_counts", [](const TriTree& t) {
    const FaceTree ft = face_tree(t);
    std::vector<std::array<int, 3>> out;
    for (std::size_t i = 0; i < ft.nodes.size(); ++i)
      if (!ft.is_leaf(static_cast<int>(i))) out.push_back(ft.child_counts(static_cast<int>(i)));
    return out;
  });
  m.def("all_stacking_programs", &all_stacking_programs);

  m.def("canonical_form", [](const Adjacency& adj) { return py::bytes(canonical_form(adj)); });
  m.def("canonical_form_rooted", [](const Adjacency& adj, Face pinned) {
    return py::bytes(canonical_form_rooted(adj, pinned));
  });

  m.def("place_apex", [](const std::vector<XY>& X, std::array<XY, 3> t, SplitCounts counts) -> std::optional<XY> {
    const auto p = place_apex(to_points(X), to_triangle(t), counts);
    if (!p) return std::nullopt;
    return to_xy(*p);
  });
  m.def("decide_embed_fixed",
        [](const TriTree& g, const std::vector<XY>& X, std::array<XY, 3> images) -> std::optional<std::vector<XY>> {
          const auto w = decide_embed_fixed(g, PointSet(to_points(X)), OuterMapping{to_triangle(images)});
          if (!w) return std::nullopt;
          return to_xys(w->position);
        });
  m.def("decide_embed_free", [](const TriTree& g, const std::vector<XY>& X) -> py::object {
    const auto e = decide_embed_free(g, PointSet(to_points(X)));
    if (!e) return py::none();
    return py::make_tuple(e->face, to_xys(e->witness.position));
  });
  m.def("brute_embed", [](const TriTree& g, const std::vector<XY>& X) { return brute_embed(g, PointSet(to_points(X))); });
  m.def("render_svg", [](const TriTree& g, const std::vector<XY>& positions, int canvas) {
    return render_svg(g, EmbedWitness{to_points(positions)}, canvas);
  }, py::arg("g"), py::arg("positions"), py::arg("canvas") = 600);

  m.def("sample", [](int n, std::int64_t extent, std::uint64_t seed, bool triangular) {
    return to_xys(sample({n, extent, seed, triangular ? HullMode::triangular : HullMode::unconstrained}).points());
  }, py::arg("n"), py::arg("extent") = 1000, py::arg("seed") = 0, py::arg("triangular") = true);

  m.def("default_catalog_path", &default_catalog_path);
  m.def("family_parameters", [](int n) { return loads(family_spec_json(family_parameters(n))); });
  m.def("family_size", [](int n) { return py::int_(py::str(family_size(family_parameters(n)).str())); });
  m.def("graph_at", [](int n, py::int_ index, std::optional<std::string> catalog) {
    return graph_at(family_parameters(n), catalog_at(resolve(catalog)), BigInt(py::str(index).cast<std::string>()));
  }, py::arg("n"), py::arg("index"), py::arg("catalog") = py::none());

  m.def("bounds_report", [](int n) { return loads(bounds_json(bounds_report(n))); });
  m.def("corollary_ratio", [](double tol) {
    const CorollaryResult c = corollary_ratio(tol);
    return py::make_tuple(static_cast<double>(c.ratio), static_cast<double>(c.residual), c.iterations);
  }, py::arg("tol") = 1e-9);
  m.def("double_count_check", &double_count_check);

  m.def("conflict", [](int n, int trials, std::uint64_t seed, std::optional<std::string> catalog) {
    ConflictConfig c;
    c.n = n;
    c.trials = trials;
    c.seed = seed;
    ConflictReport r;
    {
      py::gil_scoped_release release;
      r = conflict_search(c, catalog_at(resolve(catalog)));
    }
    return loads(conflict_json(r));
  }, py::arg("n") = 22, py::arg("trials") = 200, py::arg("seed") = 0, py::arg("catalog") = py::none());

  m.def("verify", [](const std::string& check, long trials, std::uint64_t seed, std::optional<std::string> catalog) {
    VerifyOptions o;
    o.trials = trials;
    o.seed = seed;
    VerifyReport r;
    if (check == "embedder") {
      r = verify_embedder(o);
    } else if (check == "apex") {
      r = verify_apex(o);
    } else {
      const GadgetCatalog& c = catalog_at(resolve(catalog));
      if (check == "lemma7") r = verify_gadget_lemma(c, GadgetFamily::three, o);
      else if (check == "lemma8") r = verify_gadget_lemma(c, GadgetFamily::seven, o);
      else if (check == "degrees") r = verify_degrees(c, o);
      else if (check == "catalog") r = verify_catalog(c);
      else throw py::value_error("unknown check " + check);
    }
    return loads(r.to_json());
  }, py::arg("check"), py::arg("trials") = 1000, py::arg("seed") = 1, py::arg("catalog") = py::none());

  m.attr("__version__") = "0.1.0";
}
