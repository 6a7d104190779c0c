#include <pybind11/numpy.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "adjdyn/analysis.hpp"
#include "adjdyn/engine.hpp"
#include "adjdyn/error.hpp"
#include "adjdyn/io.hpp"
#include "adjdyn/matrix_market.hpp"
#include "adjdyn/rules.hpp"
#include "adjdyn/sparse_matrix.hpp"
#include "adjdyn/systems.hpp"
#include "adjdyn/topology.hpp"

namespace py = pybind11;
using namespace adjdyn;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

py::array_t<double> to_numpy(const StateHistory& h) {
    py::array_t<double> out({h.size(), h.dim()});
    std::copy(h.values().begin(), h.values().end(), out.mutable_data());
    return out;
}

py::array_t<double> to_numpy(const StateVector& v) {
    py::array_t<double> out(v.size());
    std::copy(v.begin(), v.end(), out.mutable_data());
    return out;
}

StateVector to_vector(const Array& a) {
    if (a.ndim() != 1) throw py::value_error("expected a 1-d array");
    return {a.data(), a.data() + a.size()};
}

StateHistory to_history(const Array& a) {
    if (a.ndim() != 2) throw py::value_error("expected a 2-d array (steps x cells)");
    StateHistory h(static_cast<std::size_t>(a.shape(1)));
    for (py::ssize_t t = 0; t < a.shape(0); ++t) {
        h.append(std::span<const double>(a.data(t, 0), static_cast<std::size_t>(a.shape(1))));
    }
    return h;
}

Stencil2D named_or_explicit(const py::object& stencil, double center_weight,
                            std::optional<std::pair<std::size_t, std::size_t>> center) {
    if (py::isinstance<py::str>(stencil)) {
        const auto name = stencil.cast<std::string>();
        if (name == "moore") return moore_stencil(center_weight);
        if (name == "von_neumann") return von_neumann_stencil(center_weight);
        throw py::value_error("unknown neighborhood '" + name + "'");
    }
    if (!center) throw py::value_error("an explicit stencil needs center=(row, col)");
    return {stencil.cast<std::vector<std::vector<double>>>(), center->first, center->second};
}

}  // namespace

PYBIND11_MODULE(_adjdyn, m) {
    m.doc() = "Sparse adjacency-matrix simulator for cellular automata and related dynamical systems";

    py::register_exception<Error>(m, "Error", PyExc_ValueError);

    py::class_<SparseMatrix>(m, "SparseMatrix")
        .def_static(
            "from_triplets",
            [](std::size_t rows, std::size_t cols, const std::vector<std::tuple<std::size_t, std::size_t, double>>& t) {
                std::vector<Triplet> ts;
                ts.reserve(t.size());
                for (const auto& [r, c, w] : t) ts.push_back({r, c, w});
                return SparseMatrix::from_triplets(rows, cols, std::move(ts));
            },
            py::arg("rows"), py::arg("cols"), py::arg("triplets"))
        .def_property_readonly("rows", &SparseMatrix::rows)
        .def_property_readonly("cols", &SparseMatrix::cols)
        .def_property_readonly("nnz", &SparseMatrix::nnz)
        .def("at", &SparseMatrix::at, py::arg("row"), py::arg("col"))
        .def("triplets",
             [](const SparseMatrix& s) {
                 std::vector<std::tuple<std::size_t, std::size_t, double>> out;
                 for (const auto& t : s.triplets()) out.emplace_back(t.row, t.col, t.weight);
                 return out;
             })
        .def("to_dense",
             [](const SparseMatrix& s) {
                 const auto d = to_dense(s);
                 py::array_t<double> out({d.rows, d.cols});
                 std::copy(d.values.begin(), d.values.end(), out.mutable_data());
                 return out;
             })
        .def("matvec", [](const SparseMatrix& s, const Array& v) { return to_numpy(matvec(s, to_vector(v))); })
        .def("scaled", &SparseMatrix::scaled)
        .def("to_matrix_market", [](const SparseMatrix& s) { return to_matrix_market(s); })
        .def_static("from_matrix_market",
                    [](const std::string& text) {
                        std::istringstream is(text);
                        return read_matrix_market(is);
                    })
        .def(py::self == py::self)
        .def("__repr__", [](const SparseMatrix& s) {
            return "<SparseMatrix " + std::to_string(s.rows()) + "x" + std::to_string(s.cols()) +
                   " nnz=" + std::to_string(s.nnz()) + ">";
        });

    m.def("spectral_radius", &spectral_radius, py::arg("matrix"), py::arg("max_iters") = 10000,
          py::arg("tol") = 1e-12);
    m.def("is_symmetric", &is_symmetric);
    m.def("read_matrix_market", [](const std::filesystem::path& p) { return read_matrix_market(p); });
    m.def("write_matrix_market",
          [](const std::filesystem::path& p, const SparseMatrix& s) { write_matrix_market(p, s); });

    // topology
    m.def("pattern_weights", &pattern_weights, py::arg("n_states"), py::arg("k"));
    m.def(
        "generate_ca_1d",
        [](std::size_t width, std::vector<double> stencil, std::size_t center, bool wrapped) {
            return generate_ca_1d({width, 1, wrapped}, {std::move(stencil), center});
        },
        py::arg("width"), py::arg("stencil") = std::vector<double>{4, 2, 1}, py::arg("center") = 1,
        py::arg("wrapped") = true);
    m.def(
        "generate_ca_2d",
        [](std::size_t width, std::size_t height, const py::object& stencil, bool wrapped, double center_weight,
           std::optional<std::pair<std::size_t, std::size_t>> center) {
            return generate_ca_2d({width, height, wrapped}, named_or_explicit(stencil, center_weight, center));
        },
        py::arg("width"), py::arg("height"), py::arg("stencil") = "moore", py::arg("wrapped") = true,
        py::arg("center_weight") = 0.0, py::arg("center") = py::none(),
        "stencil is 'moore', 'von_neumann' or a list of rows with center=(row, col)");
    m.def(
        "generate_random_digraph",
        [](std::size_t n, std::size_t k, std::size_t n_states, bool allow_self, std::uint64_t seed) {
            const auto g = generate_random_digraph(n, k, PositionalBase{n_states}, allow_self, seed);
            return py::make_tuple(g.matrix, g.inputs);
        },
        py::arg("n"), py::arg("k"), py::arg("n_states") = 2, py::arg("allow_self") = false, py::arg("seed"),
        "Returns (matrix, inputs); input m of a node has weight n_states**m");

    // rules
    py::class_<RuleSpec>(m, "Rule")
        .def_property_readonly("n_states", &RuleSpec::n_states)
        .def_property_readonly("is_discrete", &RuleSpec::is_discrete)
        .def("to_text", [](const RuleSpec& r) { return rule_to_text(r); })
        .def_static("from_text", &rule_from_text)
        .def(py::self == py::self)
        .def("__repr__", [](const RuleSpec& r) { return "<" + rule_to_text(r) + ">"; });
    m.def("elementary_rule", &elementary_rule);
    m.def("game_of_life_rule", &game_of_life_rule);
    m.def(
        "life_like_rule",
        [](const std::vector<int>& birth, const std::vector<int>& survive, std::size_t max_count) {
            return life_like_rule(birth, survive, max_count);
        },
        py::arg("birth"), py::arg("survive"), py::arg("max_count") = 8);
    m.def("random_boolean_tables", &random_boolean_tables, py::arg("n_nodes"), py::arg("in_degree"),
          py::arg("seed"));
    m.def("tanh_map", &tanh_map);
    m.def(
        "logistic_map",
        [](double r, bool map_then_mix) {
            return logistic_map(r, map_then_mix ? ApplyOrder::MapThenMix : ApplyOrder::MixThenMap);
        },
        py::arg("r"), py::arg("map_then_mix") = true);
    m.def(
        "apply_rule",
        [](const RuleSpec& r, const Array& pre) {
            const auto v = to_vector(pre);
            return to_numpy(apply_rule(r, v, StateVector(v.size(), 0.0)));
        },
        py::arg("rule"), py::arg("preactivation"));

    // engine
    py::class_<DynamicalSystem>(m, "DynamicalSystem")
        .def(py::init([](SparseMatrix mat, RuleSpec rule, const Array& state) {
                 return DynamicalSystem(std::move(mat), std::move(rule), to_vector(state));
             }),
             py::arg("matrix"), py::arg("rule"), py::arg("state"))
        .def_property_readonly("matrix", &DynamicalSystem::matrix)
        .def_property_readonly("rule", &DynamicalSystem::rule)
        .def_property_readonly("time", &DynamicalSystem::time)
        .def_property("state", [](const DynamicalSystem& s) { return to_numpy(s.state()); },
                      [](DynamicalSystem& s, const Array& v) { s.set_state(to_vector(v)); })
        .def("step", &DynamicalSystem::step)
        .def(
            "run",
            [](DynamicalSystem& s, std::size_t steps, bool record) -> py::object {
                std::optional<StateHistory> h;
                {
                    py::gil_scoped_release release;
                    h = s.run(steps, record);
                }
                if (!h) return py::none();
                return to_numpy(*h);
            },
            py::arg("steps"), py::arg("record") = true,
            "Advances `steps` steps; returns the (steps + 1) x n history when record is set");

    // presets and initial states
    m.def("elementary_ca",
          [](std::size_t w, int rule, bool wrapped, const Array& init) {
              return elementary_ca(w, rule, wrapped, to_vector(init));
          },
          py::arg("width"), py::arg("rule_number"), py::arg("wrapped"), py::arg("init"));
    m.def("game_of_life",
          [](std::size_t w, std::size_t h, bool wrapped, const Array& init) {
              return game_of_life(w, h, wrapped, to_vector(init));
          },
          py::arg("width"), py::arg("height"), py::arg("wrapped"), py::arg("init"));
    m.def("random_boolean_network",
          [](std::size_t n, std::size_t k, std::uint64_t seed, const Array& init) {
              return random_boolean_network(n, k, seed, to_vector(init));
          },
          py::arg("n"), py::arg("k"), py::arg("seed"), py::arg("init"));
    m.def("coupled_map_lattice",
          [](std::size_t w, double eps, double r, bool wrapped, const Array& init) {
              return coupled_map_lattice(w, eps, r, wrapped, to_vector(init));
          },
          py::arg("width"), py::arg("eps"), py::arg("r"), py::arg("wrapped"), py::arg("init"));
    m.def("echo_state_network",
          [](std::size_t n, double density, double rho, std::uint64_t seed, const Array& init) {
              return echo_state_network(n, density, rho, seed, to_vector(init));
          },
          py::arg("n"), py::arg("density"), py::arg("rho"), py::arg("seed"), py::arg("init"));
    m.def("glider_state", [](std::size_t w, std::size_t h, std::size_t top, std::size_t left) {
        return to_numpy(glider_state(w, h, top, left));
    }, py::arg("width"), py::arg("height"), py::arg("top") = 0, py::arg("left") = 0);
    m.def("blinker_state", [](std::size_t w, std::size_t h) { return to_numpy(blinker_state(w, h)); });
    m.def("random_binary_state", [](std::size_t n, double p, std::uint64_t seed) {
        return to_numpy(random_binary_state(n, p, seed));
    }, py::arg("n"), py::arg("p_alive"), py::arg("seed"));
    m.def("random_uniform_state", [](std::size_t n, double lo, double hi, std::uint64_t seed) {
        return to_numpy(random_uniform_state(n, lo, hi, seed));
    }, py::arg("n"), py::arg("lo"), py::arg("hi"), py::arg("seed"));

    // analysis
    m.def(
        "pca_project",
        [](const Array& history, std::size_t n_components) {
            const auto p = pca_project(to_history(history), {n_components});
            py::dict out;
            out["mean"] = p.mean;
            out["components"] = p.components;
            out["explained_variance"] = p.explained_variance;
            out["points"] = p.points;
            return out;
        },
        py::arg("history"), py::arg("n_components") = 2);
    m.def(
        "detect_cycle",
        [](const Array& history, double tol) {
            const auto r = detect_cycle(to_history(history), tol);
            py::dict out;
            out["transient"] = r.transient;
            out["period"] = r.period;
            out["approximate"] = r.approximate;
            return out;
        },
        py::arg("history"), py::arg("tol") = 0.0);
    py::class_<ReadoutModel>(m, "ReadoutModel")
        .def_readonly("weights", &ReadoutModel::weights)
        .def_readonly("training_residual", &ReadoutModel::training_residual)
        .def("predict", [](const ReadoutModel& r, const Array& s) { return r.predict(to_vector(s)); });
    m.def(
        "train_linear_readout",
        [](const Array& history, const Array& targets, double ridge) {
            return train_linear_readout(to_history(history), to_vector(targets), ridge);
        },
        py::arg("history"), py::arg("targets"), py::arg("ridge"));

    // io
    m.def("write_states", [](const std::filesystem::path& p, const Array& h, const std::string& format) {
        if (format != "csv" && format != "lfst") throw py::value_error("format must be 'csv' or 'lfst'");
        write_states(p, to_history(h), format == "csv" ? StateFormat::Csv : StateFormat::Lfst);
    }, py::arg("path"), py::arg("history"), py::arg("format") = "csv");
    m.def("read_states", [](const std::filesystem::path& p) { return to_numpy(read_states(p)); });
    m.def("render_text",
          [](const Array& h, std::size_t w, std::size_t height, std::size_t n_states) {
              return render_text(to_history(h), w, height, n_states);
          },
          py::arg("history"), py::arg("width"), py::arg("height"), py::arg("n_states") = 0);
}
