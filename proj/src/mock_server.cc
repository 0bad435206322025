// Copyright 2026 The SynRES Pipeline Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "synres/mock_server.h"

#include <atomic>
#include <thread>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "synres/attributes.h"
#include "synres/base64.h"
#include "synres/clients.h"
#include "synres/error.h"
#include "synres/hash.h"
#include "synres/image.h"
#include "synres/mock_clients.h"

namespace synres {

struct MockModelServer::Impl {
  Options options;
  httplib::Server server;
  std::thread thread;
  int port = 0;
  std::atomic<int> requests{0};
  std::atomic<int> active{0};
  std::atomic<int> peak{0};

  using Handler = std::function<nlohmann::json(const nlohmann::json&)>;

  void route(const std::string& path, Handler handler) {
    server.Post(path, [this, handler](const httplib::Request& req, httplib::Response& res) {
      const int index = requests.fetch_add(1);
      const int now = active.fetch_add(1) + 1;
      int seen = peak.load();
      while (now > seen && !peak.compare_exchange_weak(seen, now)) {
      }
      if (options.delay.count() > 0) std::this_thread::sleep_for(options.delay);
      if (index < options.fail_first) {
        res.status = 503;
        res.set_content(R"({"error":"unavailable"})", "application/json");
      } else if (options.required_token &&
                 req.get_header_value("Authorization") != "Bearer " + *options.required_token) {
        res.status = 401;
        res.set_content(R"({"error":"unauthorized"})", "application/json");
      } else {
        try {
          res.set_content(handler(nlohmann::json::parse(req.body)).dump(), "application/json");
        } catch (const std::exception& e) {
          res.status = 400;
          res.set_content(nlohmann::json{{"error", e.what()}}.dump(), "application/json");
        }
      }
      active.fetch_sub(1);
    });
  }
};

MockModelServer::MockModelServer() : MockModelServer(Options{}) {}

MockModelServer::MockModelServer(Options options) : impl_(std::make_unique<Impl>()) {
  impl_->options = std::move(options);
  impl_->route("/describe", [](const nlohmann::json& req) {
    const int n = req.at("n").get<int>();
    if (n < 1) throw Error(ErrorCode::kInvalidArgument, "n must be >= 1");
    return nlohmann::json{{"expressions", mock::describe(req.dump(), n)}};
  });
  impl_->route("/generate", [](const nlohmann::json& req) {
    const Image image = mock::generate(req.at("prompt").get<std::string>(),
                                       req.at("seed").get<std::uint64_t>(), req.at("w").get<int>(),
                                       req.at("h").get<int>());
    return nlohmann::json{{"image_b64", base64_encode(encode_ppm(image))}};
  });
  impl_->route("/segment", [](const nlohmann::json& req) {
    const std::string bytes = base64_decode(req.at("image_b64").get<std::string>());
    const Image image = decode_ppm(bytes);
    return raster_to_wire(
        mock::segment(image.size(), fnv1a64(bytes), req.at("text").get<std::string>()));
  });
  impl_->route("/classify", [](const nlohmann::json& req) {
    return attributes_to_wire(classify_with_lexicon(req.at("text").get<std::string>()));
  });
  impl_->port = impl_->server.bind_to_any_port("127.0.0.1");
  if (impl_->port <= 0) throw Error(ErrorCode::kIoError, "mock server could not bind");
  impl_->thread = std::thread([this] { impl_->server.listen_after_bind(); });
  impl_->server.wait_until_ready();
}

MockModelServer::~MockModelServer() {
  impl_->server.stop();
  if (impl_->thread.joinable()) impl_->thread.join();
}

std::string MockModelServer::url() const {
  return "http://127.0.0.1:" + std::to_string(impl_->port);
}

int MockModelServer::requests() const { return impl_->requests.load(); }

int MockModelServer::peak_concurrency() const { return impl_->peak.load(); }

}  // namespace synres
