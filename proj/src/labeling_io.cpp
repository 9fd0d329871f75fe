#include "swaprobust/labeling_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "swaprobust/errors.hpp"

namespace swaprobust {

using nlohmann::json;

std::optional<std::vector<Edge>> LabelingFile::astray() const {
    if (!meta.contains("astray")) return std::nullopt;
    std::vector<Edge> out;
    for (const auto& tr : meta.at("astray")) {
        if (!tr.is_array() || tr.size() < 2) throw FormatError("meta.astray entries must be [u, v, label]");
        out.push_back(make_edge(tr[0].get<int>(), tr[1].get<int>()));
    }
    return out;
}

std::optional<int> LabelingFile::astray_b() const {
    if (!meta.contains("b")) return std::nullopt;
    return meta.at("b").get<int>();
}

std::string labeling_to_json(const EdgeLabeling& t, const json& meta) {
    std::ostringstream os;
    os << "{\n  \"n\": " << t.order() << ",\n  \"edges\": [";
    int idx = 0;
    const int n = t.order();
    for (int u = 1; u <= n; ++u) {
        for (int v = u + 1; v <= n; ++v) {
            os << (idx == 0 ? "\n    " : ",\n    ") << '[' << u << ',' << v << ',' << t.values()[idx] << ']';
            ++idx;
        }
    }
    os << "\n  ]";
    if (!meta.empty()) os << ",\n  \"meta\": " << meta.dump();
    os << "\n}\n";
    return os.str();
}

LabelingFile labeling_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& ex) {
        throw FormatError(std::string("malformed JSON: ") + ex.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges"))
        throw FormatError("labeling file needs \"n\" and \"edges\"");
    if (!doc["n"].is_number_integer()) throw FormatError("\"n\" must be an integer");
    const int n = doc["n"].get<int>();
    if (n < 1 || n > 5000) throw FormatError("\"n\" out of range");
    const int eps = edge_count(n);
    const auto& edges = doc["edges"];
    if (!edges.is_array() || static_cast<int>(edges.size()) != eps)
        throw FormatError("expected " + std::to_string(eps) + " edge entries for n=" + std::to_string(n));
    std::vector<Label> values(eps, 0);
    std::vector<char> seen(eps + 1, 0);
    for (const auto& tr : edges) {
        if (!tr.is_array() || tr.size() != 3 || !tr[0].is_number_integer() || !tr[1].is_number_integer() ||
            !tr[2].is_number_integer())
            throw FormatError("edge entries must be [u, v, label] integer triples");
        int u = tr[0].get<int>(), v = tr[1].get<int>(), x = tr[2].get<int>();
        if (u < 1 || v > n || u >= v) throw FormatError("edge [" + std::to_string(u) + "," + std::to_string(v) +
                                                        "] violates 1 <= u < v <= n");
        if (x < 1 || x > eps) throw FormatError("label " + std::to_string(x) + " outside [1," + std::to_string(eps) + "]");
        if (seen[x]) throw FormatError("not a bijection: label " + std::to_string(x) + " appears twice");
        int idx = edge_index(n, u, v);
        if (values[idx - 1] != 0)
            throw FormatError("edge [" + std::to_string(u) + "," + std::to_string(v) + "] listed twice");
        seen[x] = 1;
        values[idx - 1] = x;
    }
    LabelingFile f{EdgeLabeling(n, std::move(values))};
    if (doc.contains("meta")) {
        if (!doc["meta"].is_object()) throw FormatError("\"meta\" must be an object");
        f.meta = doc["meta"];
    }
    return f;
}

void write_file_atomic(const std::string& path, const std::string& contents) {
    namespace fs = std::filesystem;
    fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << contents;
        if (!out) throw std::runtime_error("write failed for " + tmp.string());
    }
    fs::rename(tmp, target);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void save_labeling(const EdgeLabeling& t, const std::string& path, const json& meta) {
    write_file_atomic(path, labeling_to_json(t, meta));
}

LabelingFile load_labeling(const std::string& path) { return labeling_from_json(read_file(path)); }

json edge_triples(const EdgeLabeling& t, const std::vector<Edge>& edges) {
    json arr = json::array();
    for (const Edge& e : edges) arr.push_back({e.u, e.v, t(e.u, e.v)});
    return arr;
}

}  // namespace swaprobust
