#pragma once

#include <cstdio>
#include <string>
#include <sys/types.h>
#include <vector>

#include "semsketch/fill.hpp"

namespace semsketch {

// Client side of the plugin wire protocol: newline-delimited JSON over the
// child process's standard streams. The channel is serial; one request,
// one response, in order. Spawn one client per worker thread to match in
// parallel.
//
//   -> {"op":"hello"}                          <- {"capabilities":["fill","embed"]}
//   -> {"op":"fill","template":T,"top_n":N}    <- {"candidates":[{"lemma":L,"score":S},...]}
//   -> {"op":"embed","text":T}                 <- {"vector":[...]}
//
// An {"error": "..."} response raises PluginError. The child exits on EOF.
class PluginClient final : public FillModel {
public:
    // Spawns `command` via /bin/sh -c and performs the hello handshake.
    explicit PluginClient(const std::string& command);
    ~PluginClient() override;

    PluginClient(const PluginClient&) = delete;
    PluginClient& operator=(const PluginClient&) = delete;

    bool can_fill() const override { return has_fill_; }
    bool can_embed() const override { return has_embed_; }

    std::vector<Candidate> fill(const ClozeQuery& query) override;
    std::vector<double> embed(const std::string& text) override;

    const std::vector<std::string>& capabilities() const { return capabilities_; }

private:
    std::string request(const std::string& line);

    pid_t pid_ = -1;
    std::FILE* to_child_ = nullptr;
    std::FILE* from_child_ = nullptr;
    std::string command_;
    std::vector<std::string> capabilities_;
    bool has_fill_ = false;
    bool has_embed_ = false;
};

}  // namespace semsketch
