#include "poramsey/io.hpp"

#include "poramsey/errors.hpp"

#include <fstream>
#include <sstream>

namespace poramsey::io {

namespace
{
    template <typename T>
    T field(const Json & j, const char * key)
    {
        if (! j.contains(key))
            throw InputError(std::string("missing field \"") + key + "\"");
        try {
            return j.at(key).get<T>();
        }
        catch (const nlohmann::json::exception &) {
            throw InputError(std::string("field \"") + key + "\" has the wrong type");
        }
    }
}

RawStructure raw_structure_from_json(const Json & j)
{
    if (! j.is_object())
        throw InputError("structure must be a JSON object");
    RawStructure raw;
    raw.size = field<int>(j, "size");
    raw.linear_orders = field<std::vector<std::vector<int>>>(j, "linear_orders");
    raw.p = j.contains("p") ? field<int>(j, "p") : static_cast<int>(raw.linear_orders.size());
    for (const auto & pair : field<std::vector<std::vector<int>>>(j, "partial_order")) {
        if (pair.size() != 2)
            throw InputError("partial_order entries must be pairs");
        raw.partial_order.emplace_back(pair[0], pair[1]);
    }
    raw.hasse = j.contains("hasse") && field<bool>(j, "hasse");
    if (raw.size < 0)
        throw InputError("size must be non-negative");
    return raw;
}

Structure structure_from_json(const Json & j)
{
    return Structure::validate(raw_structure_from_json(j));
}

Structure load_structure(const std::string & path)
{
    return structure_from_json(read_file(path));
}

Json to_json(const Structure & s)
{
    Json j;
    j["p"] = s.p();
    j["size"] = s.size();
    Json pairs = Json::array();
    for (auto [a, b] : s.partial_order().pairs())
        pairs.push_back({a, b});
    j["partial_order"] = pairs;
    Json orders = Json::array();
    for (const auto & o : s.linear_orders())
        orders.push_back(o.enumeration());
    j["linear_orders"] = orders;
    return j;
}

Json to_json(const LinearOrder & order)
{
    return order.enumeration();
}

Json to_json(const AnchoredSequence & a)
{
    return a.elements();
}

Json to_json(const AnchoredRigidSurjection & r)
{
    Json j;
    j["map"] = r.map();
    j["source_anchor"] = to_json(r.source_anchor());
    j["target_anchor"] = to_json(r.target_anchor());
    return j;
}

Json to_json(const Tuple & t)
{
    Json j;
    j["sets"] = t.sets;
    j["rs"] = to_json(t.rs);
    return j;
}

Json to_json(const ColoringCertificate & c)
{
    Json j;
    j["verdict"] = to_string(c.verdict);
    j["colors"] = c.colors;
    j["objects"] = c.objects;
    j["targets"] = c.targets;
    if (c.coloring)
        j["coloring"] = *c.coloring;
    return j;
}

Json to_json(const WitnessParams & w)
{
    Json j;
    j["m"] = w.m;
    j["n"] = w.n ? Json(*w.n) : Json(nullptr);
    j["anchor"] = to_json(w.anchor);
    j["verified"] = w.verified;
    j["rs_count"] = w.rs_count.str();
    j["color_count"] = w.color_count.str();
    return j;
}

Json to_json(const GridStructure & g)
{
    Json j;
    j["n"] = g.n();
    j["m"] = g.m();
    j["anchor"] = to_json(g.anchor());
    j["structure"] = to_json(g.structure());
    return j;
}

Json to_json(const ConstructResult & r)
{
    Json j;
    j["verified"] = r.verified();
    j["embedding"] = r.x_in_y.map;
    j["a_size"] = r.a_size;
    j["b_size"] = r.b_size;
    j["params"] = r.params ? to_json(*r.params) : Json(nullptr);
    j["grid"] = r.grid ? to_json(*r.grid) : Json(nullptr);
    j["certificate"] = r.certificate ? to_json(*r.certificate) : Json(nullptr);
    if (! r.note.empty())
        j["note"] = r.note;
    return j;
}

Json to_json(const InterpretationReport & r)
{
    Json j;
    j["result"] = r.holds() ? "pass" : "violation";
    j["pairs"] = r.pairs;
    if (r.violation) {
        Json v;
        v["kind"] = r.violation->kind == InterpretationViolation::Kind::implication ? "implication" : "alpha-outside-r";
        v["f1"] = r.violation->f1;
        v["s1"] = r.violation->s1;
        v["f2"] = r.violation->f2;
        v["s2"] = r.violation->s2;
        v["detail"] = r.violation->detail;
        j["violation"] = v;
    }
    return j;
}

Json parse(const std::string & text)
{
    try {
        return Json::parse(text);
    }
    catch (const nlohmann::json::parse_error & e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

Json read_file(const std::string & path)
{
    std::ifstream in(path);
    if (! in)
        throw InputError("cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str());
}

std::vector<int> parse_int_list(const std::string & text)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(item, &used);
        }
        catch (const std::exception &) {
            throw InputError("not an integer list: \"" + text + "\"");
        }
        if (used != item.size())
            throw InputError("not an integer list: \"" + text + "\"");
        out.push_back(value);
    }
    if (out.empty())
        throw InputError("empty integer list");
    return out;
}

AnchoredSequence parse_anchor(const std::string & text, int ambient)
{
    try {
        return AnchoredSequence(parse_int_list(text), ambient);
    }
    catch (const InputError &) {
        throw;
    }
    catch (const std::invalid_argument & e) {
        throw InputError(std::string("bad anchor: ") + e.what());
    }
}

std::string to_dot(const Structure & s, const std::string & name)
{
    std::ostringstream out;
    out << "digraph " << name << " {\n    rankdir=BT;\n";
    for (int x = 0; x < s.size(); ++x)
        out << "    " << x << " [label=\"" << x << " (L0 rank " << s.order(0).rank(x) << ")\"];\n";
    for (auto [a, b] : s.partial_order().covering_pairs().pairs())
        out << "    " << a << " -> " << b << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace poramsey::io
