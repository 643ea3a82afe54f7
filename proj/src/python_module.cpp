// Python bindings: engines, conversions and the oracle.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <tuple>
#include <vector>

#include "netocc/cdawg_index.hpp"
#include "netocc/eno_engine.hpp"
#include "netocc/harness.hpp"
#include "netocc/mus_bridge.hpp"
#include "netocc/oracle.hpp"
#include "netocc/sliding_index.hpp"
#include "netocc/ukk_index.hpp"

namespace py = pybind11;
using namespace netocc;

namespace {

using Pair = std::tuple<Pos, Pos>;
using Event = std::tuple<Pos, std::string, Pos, Pos>;  // step, "add"/"del", start, end

std::string as_bytes(const py::object& obj) {
    if (py::isinstance<py::bytes>(obj)) return obj.cast<std::string>();
    if (py::isinstance<py::str>(obj)) return obj.attr("encode")("utf-8").cast<std::string>();
    throw py::type_error("expected bytes or str");
}

Symbol as_symbol(const py::object& obj) {
    if (py::isinstance<py::int_>(obj)) {
        int v = obj.cast<int>();
        if (v < 0 || v > 255) throw py::value_error("symbol out of byte range");
        return static_cast<Symbol>(v);
    }
    std::string s = as_bytes(obj);
    if (s.size() != 1) throw py::value_error("expected a single byte");
    return static_cast<Symbol>(s[0]);
}

std::vector<Pair> pairs(const std::vector<Interval>& v) {
    std::vector<Pair> out;
    out.reserve(v.size());
    for (const auto& iv : v) out.emplace_back(iv.start, iv.end);
    return out;
}

std::vector<Interval> intervals(const std::vector<Pair>& v) {
    std::vector<Interval> out;
    for (auto [a, b] : v) out.push_back({a, b});
    return out;
}

std::vector<Event> events(const std::vector<DiffEvent>& evs) {
    std::vector<Event> out;
    for (const auto& ev : evs)
        out.emplace_back(ev.step, ev.kind == EventKind::add ? "add" : "del", ev.interval.start, ev.interval.end);
    return out;
}

// Online engine over either backend, chosen at construction.
class PyOnline {
public:
    explicit PyOnline(const std::string& backend) {
        if (backend == "suffix_tree")
            ukk_ = std::make_unique<EnoEngine<UkkIndex>>(false);
        else if (backend == "cdawg")
            cdawg_ = std::make_unique<EnoEngine<CdawgIndex>>(false);
        else
            throw py::value_error("backend must be 'suffix_tree' or 'cdawg'");
    }
    std::vector<Event> append(const py::object& c) {
        Symbol s = as_symbol(c);
        return events(ukk_ ? ukk_->append_char(s) : cdawg_->append_char(s));
    }
    std::vector<Event> extend(const py::object& text) {
        std::vector<Event> out;
        for (char ch : as_bytes(text)) {
            auto evs = events(ukk_ ? ukk_->append_char(static_cast<Symbol>(ch)) : cdawg_->append_char(static_cast<Symbol>(ch)));
            out.insert(out.end(), evs.begin(), evs.end());
        }
        return out;
    }
    std::vector<Pair> snapshot() const { return pairs(ukk_ ? ukk_->snapshot() : cdawg_->snapshot()); }
    std::size_t size() const { return ukk_ ? ukk_->eno().size() : cdawg_->eno().size(); }
    Pos length() const { return ukk_ ? ukk_->index().size() : cdawg_->index().size(); }
    std::size_t cdawg_edges() const {
        if (!cdawg_) throw py::value_error("only the cdawg backend reports e'");
        return cdawg_->index().edge_count();
    }

private:
    std::unique_ptr<EnoEngine<UkkIndex>> ukk_;
    std::unique_ptr<EnoEngine<CdawgIndex>> cdawg_;
};

}  // namespace

PYBIND11_MODULE(_netocc, m) {
    m.doc() = "Extended net occurrences and minimal unique substrings of byte strings";

    py::register_exception<InvariantError>(m, "InvariantError", PyExc_RuntimeError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);

    m.def("eno", [](const py::object& t) {
        EnoEngine<UkkIndex> eng(false);
        for (char ch : as_bytes(t)) eng.append_char(static_cast<Symbol>(ch));
        return pairs(eng.snapshot());
    }, py::arg("text"), "ENO of the whole text, 1-based inclusive intervals sorted by start.");
    m.def("mus", [](const py::object& t) {
        OnlineMus om;
        for (char ch : as_bytes(t)) om.append(static_cast<Symbol>(ch));
        return pairs(om.snapshot());
    }, py::arg("text"));
    m.def("mus_to_eno", [](const std::vector<Pair>& mus) { return pairs(mus_to_eno(intervals(mus))); });
    m.def("eno_to_mus", [](const std::vector<Pair>& eno, Pos lrpref, Pos lrsuf, Pos n) {
        return pairs(eno_to_mus(intervals(eno), lrpref, lrsuf, n));
    }, py::arg("eno"), py::arg("lrpref_len"), py::arg("lrsuf_len"), py::arg("n"));

    auto orc = m.def_submodule("oracle", "brute-force reference implementations");
    orc.def("eno", [](const py::object& t) { return pairs(oracle::eno(as_bytes(t))); });
    orc.def("mus", [](const py::object& t) { return pairs(oracle::mus(as_bytes(t))); });
    orc.def("occ", [](const py::object& t, const py::object& p) { return oracle::occ(as_bytes(t), as_bytes(p)); });
    orc.def("explicit_cdawg_edges", [](const py::object& t) { return oracle::explicit_cdawg_edges(as_bytes(t)); });
    orc.def("implicit_cdawg_edges", [](const py::object& t) { return oracle::implicit_cdawg_edges(as_bytes(t)); });

    py::class_<PyOnline>(m, "OnlineEno")
        .def(py::init<const std::string&>(), py::arg("backend") = "suffix_tree")
        .def("append", &PyOnline::append, py::arg("symbol"), "Append one byte; returns (step, event, start, end) tuples.")
        .def("extend", &PyOnline::extend, py::arg("text"))
        .def("snapshot", &PyOnline::snapshot)
        .def("cdawg_edges", &PyOnline::cdawg_edges)
        .def_property_readonly("length", &PyOnline::length)
        .def("__len__", &PyOnline::size);

    py::class_<EnoEngine<SlidingIndex>>(m, "SlidingEno")
        .def(py::init([](Pos d) {
                 if (d < 1) throw py::value_error("window size must be at least 1");
                 return std::make_unique<EnoEngine<SlidingIndex>>(false, d);
             }),
             py::arg("window"))
        .def("push", [](EnoEngine<SlidingIndex>& e, const py::object& c) { return events(e.slide(as_symbol(c))); })
        .def("snapshot", [](const EnoEngine<SlidingIndex>& e) { return pairs(e.snapshot()); })
        .def_property_readonly("first", [](const EnoEngine<SlidingIndex>& e) { return e.index().first(); })
        .def_property_readonly("last", [](const EnoEngine<SlidingIndex>& e) { return e.index().last(); })
        .def("__len__", [](const EnoEngine<SlidingIndex>& e) { return e.eno().size(); });

    py::class_<OnlineMus>(m, "OnlineMus")
        .def(py::init<>())
        .def("append", [](OnlineMus& om, const py::object& c) { return events(om.append(as_symbol(c))); })
        .def("snapshot", [](const OnlineMus& om) { return pairs(om.snapshot()); })
        .def("__len__", &OnlineMus::size);

    m.def("verify", [](const std::string& mode, int max_len, int alphabet, int cases, std::uint64_t seed, Pos window) {
        harness::VerifyConfig cfg{mode, max_len, alphabet, cases, seed, window, 1};
        harness::VerifyReport rep;
        {
            py::gil_scoped_release release;
            rep = harness::verify(cfg);
        }
        py::dict d;
        d["cases"] = rep.cases;
        d["steps"] = rep.steps;
        d["mismatches"] = rep.mismatches;
        d["first_mismatch"] = rep.first_mismatch;
        return d;
    }, py::arg("mode") = "online", py::arg("max_len") = 12, py::arg("alphabet") = 2, py::arg("cases") = 100,
       py::arg("seed") = 7, py::arg("window") = 8);
}
