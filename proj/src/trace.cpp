#include "rq/trace.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace rq {

int Step::ups() const
{
    return static_cast<int>(std::count(word.begin(), word.end(), 'u'));
}

int Step::downs() const
{
    return static_cast<int>(std::count(word.begin(), word.end(), 'd'));
}

Step make_G(int left, int right)
{
    Step s;
    s.kind = StepKind::G;
    s.left = left;
    s.right = right;
    return s;
}

Step make_R(const std::string& word)
{
    Step s;
    s.kind = StepKind::R;
    s.word = word;
    return s;
}

Step make_L(const std::string& word)
{
    Step s;
    s.kind = StepKind::L;
    s.word = word;
    return s;
}

void apply_step(std::vector<int>& frontier, const Step& step, int index)
{
    if (frontier.empty())
        throw TraceError(TraceError::Kind::FrontierMismatch, index,
                         "FrontierMismatch at step " + std::to_string(index) + ": no open side left");
    int s = frontier.front();
    std::vector<int> fresh;
    switch (step.kind) {
    case StepKind::G:
        if (step.left < 0 || step.right < 0 || step.left + step.right != s - 1)
            throw TraceError(TraceError::Kind::FrontierMismatch, index,
                             "FrontierMismatch at step " + std::to_string(index) + ": " + to_string(step) +
                                 " on a side of size " + std::to_string(s));
        if (step.right > 0) fresh.push_back(step.right);
        if (step.left > 0) fresh.push_back(step.left);
        break;
    case StepKind::R:
    case StepKind::L: {
        for (char c : step.word)
            if (c != 'u' && c != 'd')
                throw TraceError(TraceError::Kind::FrontierMismatch, index, "bad letter in word");
        int up = step.ups(), down = step.downs();
        if (step.kind == StepKind::R) {
            if (up > 0) fresh.push_back(up);
            fresh.push_back(s + down);
        } else {
            fresh.push_back(s + down);
            if (up > 0) fresh.push_back(up);
        }
        break;
    }
    }
    frontier.erase(frontier.begin());
    frontier.insert(frontier.begin(), fresh.begin(), fresh.end());
}

void check_trace(const Trace& t)
{
    if (t.base < 1) throw TraceError(TraceError::Kind::FrontierMismatch, 0, "FrontierMismatch: base must be >= 1");
    std::vector<int> frontier{t.base};
    for (std::size_t i = 0; i < t.steps.size(); ++i) apply_step(frontier, t.steps[i], static_cast<int>(i));
    if (!frontier.empty())
        throw TraceError(TraceError::Kind::IncompleteTrace, static_cast<int>(t.steps.size()),
                         "IncompleteTrace: " + std::to_string(frontier.size()) + " open side(s) remain");
}

bool is_complete(const Trace& t)
{
    try {
        check_trace(t);
        return true;
    } catch (const TraceError&) {
        return false;
    }
}

std::string to_string(const Step& s)
{
    switch (s.kind) {
    case StepKind::G:
        return "G(" + std::to_string(s.left) + "," + std::to_string(s.right) + ")";
    case StepKind::R:
        return "R(" + s.word + ")";
    case StepKind::L:
        return "L(" + s.word + ")";
    }
    return {};
}

std::string to_string(const Trace& t)
{
    std::string out = "p=" + std::to_string(t.base) + ";";
    for (const auto& s : t.steps) out += " " + to_string(s);
    return out;
}

Trace parse_trace(const std::string& text)
{
    auto fail = [&](const std::string& msg) -> TraceError {
        return TraceError(TraceError::Kind::Parse, 0, "cannot parse trace '" + text + "': " + msg);
    };
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '|')) ++i;
    };
    auto number = [&] {
        skip();
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (start == i) throw fail("expected a number");
        return std::stoi(text.substr(start, i - start));
    };
    auto expect = [&](char c) {
        skip();
        if (i >= text.size() || text[i] != c) throw fail(std::string("expected '") + c + "'");
        ++i;
    };
    Trace t;
    skip();
    expect('p');
    expect('=');
    t.base = number();
    expect(';');
    for (skip(); i < text.size(); skip()) {
        char k = text[i++];
        if (k == 'G') {
            expect('(');
            int a = number();
            expect(',');
            int b = number();
            expect(')');
            t.steps.push_back(make_G(a, b));
        } else if (k == 'R' || k == 'L') {
            expect('(');
            std::string w;
            while (i < text.size() && (text[i] == 'u' || text[i] == 'd')) w += text[i++];
            expect(')');
            t.steps.push_back(k == 'R' ? make_R(w) : make_L(w));
        } else {
            throw fail(std::string("unexpected '") + k + "'");
        }
    }
    return t;
}

}  // namespace rq
