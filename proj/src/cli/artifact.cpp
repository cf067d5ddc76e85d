#include <openssl/evp.h>

#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "orthogrid/cli/cli.hpp"
#include "orthogrid/errors.hpp"

namespace orthogrid::cli {

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw InvariantViolation("sha256: digest failed");
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  return os.str();
}

std::string seal_csv(std::string body) {
  const std::string hash = sha256_hex(body);
  body += "# sha256: " + hash + "\n";
  return body;
}

std::string seal_json(const std::string& compact_without_hash) {
  nlohmann::json j = nlohmann::json::parse(compact_without_hash);
  j["sha256"] = sha256_hex(j.dump());
  return j.dump(2) + "\n";
}

}  // namespace orthogrid::cli
