#ifndef HUBS_IO_HPP
#define HUBS_IO_HPP

#include <string>

#include <json.hpp>

#include "hubs/common.hpp"
#include "hubs/detect.hpp"
#include "hubs/params.hpp"

namespace hubs::io {

using json = nlohmann::json;

// Binary matrix file: 24-byte header (magic "HUBM", u16 version, u32 N,
// u32 n, u16 flags, 8 reserved bytes), then row-major IEEE-754 doubles,
// little-endian.
void save_matrix(const std::string& path, const Eigen::Ref<const Matrix>& m,
                 std::uint16_t flags = 0);
Matrix load_matrix(const std::string& path);

json params_to_json(const ModelParams& p);
ModelParams params_from_json(const json& j);

json support_to_json(const PlantedSupport& s);
PlantedSupport support_from_json(const json& j);

// Instance = matrix file + JSON sidecar (ground truth, params, seed).
// Default sidecar path is matrix_path + ".json".
void save_instance(const HubInstance& inst, const std::string& matrix_path,
                   const std::string& sidecar_path = "");
HubInstance load_instance(const std::string& matrix_path,
                          const std::string& sidecar_path = "");

json detection_to_json(const DetectionResult& r, const ModelParams& params,
                       std::uint64_t seed, const RecoveryMetrics* metrics = nullptr,
                       const std::string& scores_path = "");

}  // namespace hubs::io

#endif  // HUBS_IO_HPP
