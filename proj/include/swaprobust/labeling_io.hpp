#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "swaprobust/graph.hpp"

namespace swaprobust {

struct LabelingFile {
    EdgeLabeling t;
    nlohmann::json meta = nlohmann::json::object();

    // Astray edges from meta.astray, if present.
    std::optional<std::vector<Edge>> astray() const;
    std::optional<int> astray_b() const;
};

std::string labeling_to_json(const EdgeLabeling& t, const nlohmann::json& meta = nlohmann::json::object());
LabelingFile labeling_from_json(const std::string& text);

void save_labeling(const EdgeLabeling& t, const std::string& path,
                   const nlohmann::json& meta = nlohmann::json::object());
LabelingFile load_labeling(const std::string& path);

// Edge triples [u, v, label] for a set of edges of t.
nlohmann::json edge_triples(const EdgeLabeling& t, const std::vector<Edge>& edges);

// Writes via a temporary sibling and renames, so readers never see partial files.
void write_file_atomic(const std::string& path, const std::string& contents);
std::string read_file(const std::string& path);

}  // namespace swaprobust
