// Python bindings for the main operations: division and exponentiation,
// searching and sorting, the three containers, stable matching and
// placement, topological sorting and Euler circuits.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "veralgo/bst_set.hpp"
#include "veralgo/contracts.hpp"
#include "veralgo/graphs.hpp"
#include "veralgo/matching.hpp"
#include "veralgo/max_heap.hpp"
#include "veralgo/numerics.hpp"
#include "veralgo/open_hash_set.hpp"
#include "veralgo/search_sort.hpp"

namespace py = pybind11;
using namespace veralgo;

namespace {

ContractMode mode_of(const std::string& name) {
  auto mode = parse_contract_mode(name);
  if (!mode.has_value()) {
    throw py::value_error("contract mode must be 'off', 'assert' or 'log'");
  }
  return *mode;
}

struct PyHeap {
  ContractContext ctx;
  MaxHeap heap;

  PyHeap(std::size_t capacity, const std::string& mode)
      : ctx(mode_of(mode)), heap(ctx, capacity) {}
};

struct PyHashSet {
  ContractContext ctx;
  OpenHashSet<std::string> set;

  PyHashSet(std::size_t capacity, const std::string& mode,
            std::optional<std::function<std::size_t(const std::string&)>> fn)
      : ctx(mode_of(mode)),
        set(ctx,
            fn.has_value()
                ? *fn
                : [](const std::string& s) { return s.size(); },
            capacity) {}
};

struct PyTreeSet {
  ContractContext ctx;
  BstSet set;

  explicit PyTreeSet(const std::string& mode) : ctx(mode_of(mode)), set(ctx) {}
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Contract-checked classic algorithms and containers";

  py::register_exception<ContractViolation>(m, "ContractViolation");

  py::class_<Rational>(m, "Rational")
      .def(py::init<std::int64_t>(), py::arg("numerator"))
      .def(py::init<std::int64_t, std::int64_t>(), py::arg("numerator"),
           py::arg("denominator"))
      .def_static("parse", &Rational::parse)
      .def("__str__", &Rational::to_string)
      .def("__repr__",
           [](const Rational& r) { return "Rational(" + r.to_string() + ")"; })
      .def("__eq__",
           [](const Rational& a, const Rational& b) { return a == b; })
      .def("__mul__",
           [](const Rational& a, const Rational& b) { return a * b; })
      .def("__add__",
           [](const Rational& a, const Rational& b) { return a + b; })
      .def("__sub__",
           [](const Rational& a, const Rational& b) { return a - b; });

  m.def(
      "div",
      [](std::uint64_t n, std::uint64_t d, const std::string& mode) {
        ContractContext ctx(mode_of(mode));
        DivResult r = div_euclid(ctx, n, d);
        return py::make_tuple(r.quotient, r.remainder);
      },
      py::arg("n"), py::arg("d"), py::arg("mode") = "assert");

  m.def("power_naive", &power_naive, py::arg("x"), py::arg("n"));
  m.def(
      "power_dc",
      [](const Rational& x, std::uint64_t n, const std::string& mode) {
        ContractContext ctx(mode_of(mode));
        return power_dc(ctx, x, n);
      },
      py::arg("x"), py::arg("n"), py::arg("mode") = "assert");

  m.def("is_sorted", [](const std::vector<Key>& s) {
    return is_sorted_seq(std::span<const Key>(s));
  });
  m.def(
      "binary_search",
      [](const std::vector<Key>& s, Key x, const std::string& mode) {
        ContractContext ctx(mode_of(mode));
        return binary_search_seq(ctx, std::span<const Key>(s), x);
      },
      py::arg("s"), py::arg("x"), py::arg("mode") = "assert");
  m.def(
      "insertion_sort",
      [](std::vector<Key> s, const std::string& mode) {
        ContractContext ctx(mode_of(mode));
        insertion_sort(ctx, s);
        return s;
      },
      py::arg("s"), py::arg("mode") = "assert");

  py::class_<PyHeap>(m, "MaxHeap")
      .def(py::init<std::size_t, const std::string&>(),
           py::arg("capacity") = 10, py::arg("mode") = "assert")
      .def("insert", [](PyHeap& h, Key x) { h.heap.insert(x); })
      .def("delete_max", [](PyHeap& h) { return h.heap.delete_max(); })
      .def("get_max", [](PyHeap& h) { return h.heap.get_max(); })
      .def("is_empty", [](const PyHeap& h) { return h.heap.is_empty(); })
      .def("__len__", [](const PyHeap& h) { return h.heap.size(); })
      .def("items", [](const PyHeap& h) {
        auto span = h.heap.items();
        return std::vector<Key>(span.begin(), span.end());
      });

  py::class_<PyHashSet>(m, "HashSet")
      .def(py::init<std::size_t, const std::string&,
                    std::optional<
                        std::function<std::size_t(const std::string&)>>>(),
           py::arg("capacity") = 101, py::arg("mode") = "assert",
           py::arg("hash_fn") = py::none())
      .def("insert", [](PyHashSet& h, const std::string& x) { h.set.insert(x); })
      .def("remove", [](PyHashSet& h, const std::string& x) { h.set.remove(x); })
      .def("contains",
           [](PyHashSet& h, const std::string& x) { return h.set.contains(x); })
      .def("elems", [](const PyHashSet& h) { return h.set.elems(); })
      .def("__len__", [](const PyHashSet& h) { return h.set.used(); });

  py::class_<PyTreeSet>(m, "TreeSet")
      .def(py::init<const std::string&>(), py::arg("mode") = "assert")
      .def("insert", [](PyTreeSet& t, Key x) { t.set.insert(x); })
      .def("remove", [](PyTreeSet& t, Key x) { t.set.remove(x); })
      .def("contains", [](PyTreeSet& t, Key x) { return t.set.contains(x); })
      .def("min", [](PyTreeSet& t) { return t.set.min(); })
      .def("max", [](PyTreeSet& t) { return t.set.max(); })
      .def("as_sorted_list",
           [](const PyTreeSet& t) { return t.set.as_sorted_vector(); })
      .def("elems", [](const PyTreeSet& t) { return t.set.elems(); });

  m.def("precedes", [](AgentId e1, AgentId e2,
                       const std::vector<AgentId>& s) {
    return precedes(e1, e2, std::span<const AgentId>(s));
  });
  m.def("is_stable",
        [](const std::map<AgentId, AgentId>& couples,
           const std::map<AgentId, std::vector<AgentId>>& men,
           const std::map<AgentId, std::vector<AgentId>>& women) {
          return is_stable(couples, PrefTable{men}, PrefTable{women});
        });
  m.def(
      "stable_matching",
      [](const std::map<AgentId, std::vector<AgentId>>& men,
         const std::map<AgentId, std::vector<AgentId>>& women,
         const std::string& mode) {
        ContractContext ctx(mode_of(mode));
        return stable_matching(ctx, PrefTable{men}, PrefTable{women});
      },
      py::arg("proposers"), py::arg("responders"), py::arg("mode") = "assert");
  m.def(
      "teachers_placement",
      [](const std::set<AgentId>& vacancies,
         const std::vector<AgentId>& teachers,
         const std::map<AgentId, std::vector<AgentId>>& preferences,
         const std::map<AgentId, AgentId>& initial, const std::string& mode) {
        ContractContext ctx(mode_of(mode));
        PlacementInstance inst{vacancies, teachers, PrefTable{preferences},
                               initial};
        return teachers_placement(ctx, inst);
      },
      py::arg("vacancies"), py::arg("teachers"), py::arg("preferences"),
      py::arg("initial"), py::arg("mode") = "assert");

  m.def("is_top_sorting",
        [](const std::vector<Vertex>& s, const std::set<Vertex>& vertices,
           const std::set<Edge>& edges) {
          return is_top_sorting(std::span<const Vertex>(s),
                                DiGraph{vertices, edges});
        });
  m.def("is_acyclic",
        [](const std::set<Vertex>& vertices, const std::set<Edge>& edges) {
          return is_acyclic(DiGraph{vertices, edges});
        });
  m.def(
      "topsort",
      [](const std::set<Vertex>& vertices, const std::set<Edge>& edges,
         const std::string& mode) {
        ContractContext ctx(mode_of(mode));
        return topsort(ctx, DiGraph{vertices, edges});
      },
      py::arg("vertices"), py::arg("edges"), py::arg("mode") = "assert");

  m.def("has_even_degrees",
        [](const std::map<Vertex, std::set<Vertex>>& adj) {
          return has_even_degrees(UGraph{adj});
        });
  m.def("is_connected", [](const std::map<Vertex, std::set<Vertex>>& adj) {
    return is_connected(UGraph{adj});
  });
  m.def("is_euler_circuit",
        [](const std::vector<Vertex>& s,
           const std::map<Vertex, std::set<Vertex>>& adj) {
          return is_euler_circuit(std::span<const Vertex>(s), UGraph{adj});
        });
  m.def("is_euler_trail",
        [](const std::vector<Vertex>& s,
           const std::map<Vertex, std::set<Vertex>>& adj) {
          return is_euler_trail(std::span<const Vertex>(s), UGraph{adj});
        });
  m.def(
      "find_euler_circuit",
      [](const std::map<Vertex, std::set<Vertex>>& adj,
         const std::string& mode) {
        ContractContext ctx(mode_of(mode));
        return find_euler_circuit(ctx, UGraph{adj});
      },
      py::arg("adj"), py::arg("mode") = "assert");
}
