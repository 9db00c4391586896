#include "celltrace/io/manifest.hpp"

#include <openssl/evp.h>

#include <array>
#include <fstream>
#include <json.hpp>
#include <memory>

#include "celltrace/core/error.hpp"

namespace celltrace {

namespace {

class Sha256 {
 public:
  Sha256() : ctx_(EVP_MD_CTX_new(), EVP_MD_CTX_free) {
    if (!ctx_ || EVP_DigestInit_ex(ctx_.get(), EVP_sha256(), nullptr) != 1)
      throw Error(ErrorCode::FileError, "SHA-256 unavailable");
  }
  void update(const void* data, std::size_t n) { EVP_DigestUpdate(ctx_.get(), data, n); }
  std::string hex() {
    std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx_.get(), md.data(), &len);
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
      out.push_back(kHex[md[i] >> 4]);
      out.push_back(kHex[md[i] & 15]);
    }
    return out;
  }

 private:
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx_;
};

}  // namespace

std::string sha256_bytes(std::string_view bytes) {
  Sha256 h;
  h.update(bytes.data(), bytes.size());
  return h.hex();
}

std::string sha256_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::FileError, "cannot read " + path.string());
  Sha256 h;
  std::array<char, 1 << 16> buf{};
  while (in) {
    in.read(buf.data(), buf.size());
    h.update(buf.data(), static_cast<std::size_t>(in.gcount()));
  }
  return h.hex();
}

std::string relative_to(const std::filesystem::path& p, const std::filesystem::path& base) {
  std::error_code ec;
  const auto rel = std::filesystem::relative(p, base, ec);
  return (ec || rel.empty() ? p : rel).generic_string();
}

void Manifest::write(const std::filesystem::path& path) const {
  nlohmann::ordered_json j;
  j["format"] = "celltrace.manifest";
  j["version"] = 1;
  j["command"] = command;
  j["tool_version"] = tool_version;
  j["seed"] = seed ? nlohmann::ordered_json(*seed) : nlohmann::ordered_json(nullptr);
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : parameters) params[k] = v;
  j["parameters"] = params;
  auto refs = [](const std::vector<ArtifactRef>& v) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : v) arr.push_back({{"path", r.path}, {"sha256", r.sha256}});
    return arr;
  };
  j["inputs"] = refs(inputs);
  j["outputs"] = refs(outputs);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::FileError, "cannot write " + path.string());
  out << j.dump(1) << '\n';
}

Manifest Manifest::read(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorCode::PipelineOrderError,
                "missing upstream manifest " + path.generic_string());
  try {
    nlohmann::json j;
    in >> j;
    Manifest m;
    m.command = j.at("command").get<std::string>();
    m.tool_version = j.at("tool_version").get<std::string>();
    if (!j.at("seed").is_null()) m.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& [k, v] : j.at("parameters").items()) m.parameters.emplace_back(k, v.get<std::string>());
    for (const auto& r : j.at("inputs")) m.inputs.push_back({r.at("path"), r.at("sha256")});
    for (const auto& r : j.at("outputs")) m.outputs.push_back({r.at("path"), r.at("sha256")});
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::SchemaError, "manifest " + path.string() + ": " + e.what());
  }
}

}  // namespace celltrace
