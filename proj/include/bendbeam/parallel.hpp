// SPDX-License-Identifier: Apache-2.0
//
// bendbeam: near-field bending beams and physical layer security
// Copyright (C) 2026 The bendbeam authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef BENDBEAM_PARALLEL_HPP
#define BENDBEAM_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace bendbeam
{
    inline unsigned default_thread_count()
    {
        const unsigned n = std::thread::hardware_concurrency();
        return n == 0 ? 1 : n;
    }

    // Calls body(begin, end) on contiguous, statically assigned index blocks.
    // Each index is handled by exactly one call, so any body that writes only
    // to its own indices produces results independent of the thread count.
    template <class Body>
    void parallel_for(std::size_t count, unsigned threads, Body &&body)
    {
        if (count == 0)
            return;
        if (threads == 0)
            threads = default_thread_count();
        const std::size_t workers = std::min<std::size_t>(threads, count);
        if (workers == 1)
        {
            body(std::size_t{0}, count);
            return;
        }

        std::exception_ptr failure;
        std::mutex failure_mutex;
        std::vector<std::thread> pool;
        pool.reserve(workers);
        const std::size_t block = count / workers;
        const std::size_t extra = count % workers;
        std::size_t begin = 0;
        for (std::size_t w = 0; w < workers; ++w)
        {
            const std::size_t end = begin + block + (w < extra ? 1 : 0);
            pool.emplace_back([&, begin, end] {
                try
                {
                    body(begin, end);
                }
                catch (...)
                {
                    std::lock_guard lock(failure_mutex);
                    if (!failure)
                        failure = std::current_exception();
                }
            });
            begin = end;
        }
        for (auto &t : pool)
            t.join();
        if (failure)
            std::rethrow_exception(failure);
    }
}

#endif
