#pragma once

#include <filesystem>
#include <random>
#include <string>

#ifndef KOLAN_SOURCE_DIR
#error "KOLAN_SOURCE_DIR must be defined by the build"
#endif

namespace testsupport {

inline std::string source_path(const std::string& rel) {
    return std::string(KOLAN_SOURCE_DIR) + "/" + rel;
}

inline std::string data_path(const std::string& rel) { return source_path("data/" + rel); }

// unique scratch directory, removed on destruction
class TempDir {
  public:
    TempDir() {
        static std::mt19937_64 rng(std::random_device{}());
        path_ = std::filesystem::temp_directory_path() /
                ("kolan_test_" + std::to_string(rng()));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    const std::filesystem::path& path() const { return path_; }
    std::string str(const std::string& rel = "") const {
        return rel.empty() ? path_.string() : (path_ / rel).string();
    }

  private:
    std::filesystem::path path_;
};

}  // namespace testsupport
