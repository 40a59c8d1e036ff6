#include "poramsey/errors.hpp"
#include "poramsey/grid.hpp"
#include "poramsey/interp.hpp"
#include "poramsey/io.hpp"
#include "poramsey/linext.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace poramsey;

// Everything crosses the boundary as JSON text; the Python side decodes it.
namespace
{
    Structure load(const std::string & text)
    {
        return io::structure_from_json(io::parse(text));
    }

    SearchLimits limits(const std::string & max_colorings, int jobs)
    {
        SearchLimits l;
        l.max_colorings = BigInt(max_colorings);
        l.jobs = jobs;
        return l;
    }
}

PYBIND11_MODULE(_poramsey, m)
{
    m.doc() = "Ramsey constructions for finite posets with linear extensions";

    static py::exception<InfeasibleError> infeasible(m, "InfeasibleError", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        }
        catch (const InfeasibleError & e) {
            py::set_error(infeasible, e.what());
        }
    });

    m.def("validate", [](const std::string & text) { return io::to_json(load(text)).dump(); });
    m.def("chain", [](int n, int p) { return io::to_json(Structure::chain(n, p)).dump(); }, py::arg("n"), py::arg("p") = 1);
    m.def("antichain", [](int n, int p) { return io::to_json(Structure::antichain(n, p)).dump(); }, py::arg("n"), py::arg("p") = 1);
    m.def("to_dot", [](const std::string & text) { return io::to_dot(load(text)); });

    m.def("extensions", [](const std::string & text, int order_index) {
        const auto space = extension_space(load(text), order_index);
        std::vector<std::vector<int>> out;
        for (const auto & l : space.members())
            out.push_back(l.enumeration());
        return out;
    }, py::arg("structure"), py::arg("order_index") = 0);

    m.def("count_rs", [](int from, int to) { return count_rs(AnchoredSequence::trivial(from), AnchoredSequence::trivial(to)).str(); });
    m.def("rigid_surjections", [](int from, int to) {
        std::vector<std::vector<int>> out;
        for (const auto & r : enumerate_rs(AnchoredSequence::trivial(from), AnchoredSequence::trivial(to)))
            out.push_back(r.map());
        return out;
    });

    m.def("copies", [](const std::string & x, const std::string & z) {
        std::vector<std::vector<int>> out;
        for (const auto & c : enumerate_copies(load(x), load(z)))
            out.push_back(c.elements);
        return out;
    });

    m.def("verify_witness", [](const std::string & z, const std::string & x, const std::string & y, int d, const std::string & max_colorings, int jobs) {
        return io::to_json(verify_ramsey_witness(load(z), load(x), load(y), d, limits(max_colorings, jobs))).dump();
    }, py::arg("z"), py::arg("x"), py::arg("y"), py::arg("d"), py::arg("max_colorings") = "4294967296", py::arg("jobs") = 1);

    m.def("verify_product", [](int n, int d, int k, int l, int mm, const std::string & max_colorings) {
        return io::to_json(verify_product_witness(n, d, k, l, mm, limits(max_colorings, 1))).dump();
    }, py::arg("n"), py::arg("d"), py::arg("k"), py::arg("l"), py::arg("m"), py::arg("max_colorings") = "4294967296");

    m.def("search_product", [](int d, int k, int l, int mm, int n_max) { return search_product(d, k, l, mm, n_max).n; },
        py::arg("d"), py::arg("k"), py::arg("l"), py::arg("m"), py::arg("n_max") = 8);

    m.def("grid", [](int n, int mm, std::vector<int> anchor) {
        return io::to_json(GridStructure(n, mm, AnchoredSequence(std::move(anchor), mm))).dump();
    }, py::arg("n"), py::arg("m"), py::arg("anchor") = std::vector<int>{0});

    m.def("construct_witness", [](const std::string & x, const std::string & y, int d) {
        return io::to_json(construct_witness(load(x), load(y), d)).dump();
    });

    m.def("minimal_witness", [](const std::string & x, const std::string & y, int d, int bound) {
        return io::to_json(minimal_witness_search(load(x), load(y), d, bound).z).dump();
    }, py::arg("x"), py::arg("y"), py::arg("d"), py::arg("bound") = 6);

    m.def("interpretation_holds", [](const std::string & x, const std::string & y, int n, std::vector<int> anchor, int mm) {
        const auto frame = InterpFrame::make(load(x), load(y));
        return check_interpretation(frame, TwistMember{n, AnchoredSequence(std::move(anchor), mm)}).holds();
    }, py::arg("x"), py::arg("y"), py::arg("n"), py::arg("anchor") = std::vector<int>{0}, py::arg("m") = 1);
}
