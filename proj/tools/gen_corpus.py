#!/usr/bin/env python3
"""Generates the bundled desk corpus under fixtures/corpus.

Each repo draws identifiers from its own domain word list plus a shared list
of generic words, so held-out repos contain words never seen in training.
Output is deterministic for a given --seed.
"""

import argparse
import pathlib
import random

DOMAINS = {
    "warehouse": ["shelf", "pallet", "crate", "stock", "bin", "aisle", "forklift", "parcel", "weight", "dock", "bay", "load"],
    "banking": ["account", "balance", "deposit", "loan", "interest", "teller", "ledger", "branch", "credit", "debit", "vault", "fee"],
    "weather": ["rain", "wind", "humidity", "pressure", "cloud", "storm", "forecast", "sensor", "gust", "frost", "dew", "radar"],
    "music": ["track", "album", "tempo", "chord", "melody", "volume", "playlist", "rhythm", "pitch", "beat", "note", "bass"],
    "garden": ["seed", "soil", "plant", "water", "sprout", "leaf", "root", "bloom", "weed", "harvest", "pot", "mulch"],
    "transit": ["bus", "route", "stop", "ticket", "fare", "driver", "station", "rider", "delay", "schedule", "platform", "lane"],
    "kitchen": ["recipe", "oven", "flour", "sugar", "butter", "spoon", "dough", "batch", "slice", "crust", "sauce", "grill"],
    "clinic": ["patient", "dose", "nurse", "ward", "pulse", "visit", "chart", "bed", "shift", "vitals", "triage", "clinic"],
    "astronomy": ["star", "orbit", "planet", "comet", "lens", "galaxy", "moon", "telescope", "nebula", "parallax", "flux", "zenith"],
    "arcade": ["player", "score", "level", "coin", "bonus", "lives", "combo", "boss", "token", "streak", "joystick", "arcade"],
}

GENERIC = ["total", "current", "max", "min", "pending", "next", "last", "base", "remaining", "average",
           "count", "limit", "rate", "size", "value", "step", "amount", "extra", "old", "new"]

PRIMS = ["int", "double"]


def cap(w):
    return w[0].upper() + w[1:]


def camel(words):
    return words[0] + "".join(cap(w) for w in words[1:])


class FileGen:
    def __init__(self, rng, domain_words, class_name, others):
        self.rng = rng
        self.words = domain_words
        self.class_name = class_name
        self.others = others
        self.used = set()
        self.lines = []

    def name(self, parts=2):
        for _ in range(100):
            if parts == 1:
                ws = [self.rng.choice(self.words)]
            elif self.rng.random() < 0.5:
                ws = [self.rng.choice(GENERIC), self.rng.choice(self.words)]
            else:
                ws = [self.rng.choice(self.words), self.rng.choice(self.words)]
                if ws[0] == ws[1]:
                    continue
            if parts == 3:
                ws = [self.rng.choice(GENERIC)] + ws
            n = camel(ws)
            if n not in self.used and n != self.class_name[0].lower() + self.class_name[1:]:
                self.used.add(n)
                return n
        raise RuntimeError("name space exhausted")

    def emit(self, depth, text):
        self.lines.append("  " * depth + text)

    def generate(self):
        rng = self.rng
        fields = []
        for _ in range(rng.randint(3, 5)):
            fields.append((rng.choice(PRIMS), self.name(rng.choice([1, 2, 2]))))
        label = self.name(2)
        helper = None
        if self.others and rng.random() < 0.6:
            helper = (rng.choice(self.others), self.name(1 if rng.random() < 0.5 else 2))

        self.emit(0, "public class %s {" % self.class_name)
        for t, n in fields:
            mods = rng.choice(["private ", "", "private "])
            init = ""
            if rng.random() < 0.3:
                init = " = %s" % ("0" if t == "int" else "0.0")
            self.emit(1, "%s%s %s%s;" % (mods, t, n, init))
        self.emit(1, "private String %s;" % label)
        if helper:
            self.emit(1, "private %s %s;" % helper)
        self.emit(0, "")

        # constructor
        t0, f0 = fields[0]
        p = self.name(2)
        self.emit(1, "public %s(%s %s, String %s) {" % (self.class_name, t0, p, label + "Text"))
        self.emit(2, "this.%s = %s;" % (f0, p))
        self.emit(2, "%s = %s;" % (label, label + "Text"))
        if helper:
            self.emit(2, "%s = new %s();" % (helper[1], helper[0]))
        self.emit(1, "}")
        self.emit(0, "")

        makers = [self.getter, self.setter, self.accumulate, self.ratio, self.check, self.drain, self.combine]
        chosen = rng.sample(makers, rng.randint(3, 5))
        for make in chosen:
            make(fields)
            self.emit(0, "")
        if helper and rng.random() < 0.7:
            self.delegate(helper, fields)
            self.emit(0, "")
        self.emit(1, "public String describe() {")
        self.emit(2, "return %s;" % label)
        self.emit(1, "}")
        self.emit(0, "}")
        return "\n".join(self.lines) + "\n"

    def pick(self, fields, prim=None):
        pool = [f for f in fields if prim is None or f[0] == prim]
        return self.rng.choice(pool or fields)

    def getter(self, fields):
        t, f = self.pick(fields)
        self.emit(1, "public %s get%s() {" % (t, cap(f)))
        self.emit(2, "return %s;" % f)
        self.emit(1, "}")

    def setter(self, fields):
        t, f = self.pick(fields)
        self.emit(1, "public void set%s(%s %s) {" % (cap(f), t, f))
        self.emit(2, "this.%s = %s;" % (f, f))
        self.emit(1, "}")

    def accumulate(self, fields):
        t, f = self.pick(fields)
        amount = self.name(2)
        idx = self.rng.choice(["i", "k", "index"])
        self.emit(1, "public void addTo%s(int %s) {" % (cap(f), amount))
        self.emit(2, "for (int %s = 0; %s < %s; %s++) {" % (idx, idx, amount, idx))
        self.emit(3, "%s = %s + %s;" % (f, f, idx))
        self.emit(2, "}")
        self.emit(1, "}")

    def ratio(self, fields):
        t, f = self.pick(fields)
        limit = self.name(2)
        local = self.name(2)
        self.emit(1, "public double compute%s(double %s) {" % (cap(local), limit))
        self.emit(2, "double %s = %s / %s;" % (local, f, limit))
        self.emit(2, "if (%s > 1.0) {" % local)
        self.emit(3, "%s = 1.0;" % local)
        self.emit(2, "}")
        self.emit(2, "return %s;" % local)
        self.emit(1, "}")

    def check(self, fields):
        (ta, a), (tb, b) = self.rng.sample(fields, 2)
        flag = self.name(2)
        threshold = self.name(2)
        self.emit(1, "public boolean is%s(int %s) {" % (cap(flag), threshold))
        self.emit(2, "boolean %s = %s > 0 && %s < %s;" % (flag, a, b, threshold))
        self.emit(2, "return %s;" % flag)
        self.emit(1, "}")

    def drain(self, fields):
        t, f = self.pick(fields, "int")
        step = self.name(2)
        done = self.name(2)
        self.emit(1, "public int drain%s(int %s) {" % (cap(f), step))
        self.emit(2, "int %s = 0;" % done)
        self.emit(2, "while (%s > 0) {" % f)
        self.emit(3, "%s = %s - %s;" % (f, f, step))
        self.emit(3, "%s = %s + %s;" % (done, done, step))
        self.emit(2, "}")
        self.emit(2, "return %s;" % done)
        self.emit(1, "}")

    def combine(self, fields):
        (ta, a), (tb, b) = self.rng.sample(fields, 2)
        scale = self.name(2)
        result = self.name(2)
        self.emit(1, "public double merge%s(double %s) {" % (cap(result), scale))
        self.emit(2, "double %s = %s * %s;" % (result, a, scale))
        self.emit(2, "%s = %s + %s;" % (result, result, b))
        self.emit(2, "return %s;" % result)
        self.emit(1, "}")

    def delegate(self, helper, fields):
        cls, h = helper
        t, f = self.pick(fields)
        self.emit(1, "public String sync%s() {" % cap(h))
        self.emit(2, "if (%s == null) {" % h)
        self.emit(3, "%s = new %s();" % (h, cls))
        self.emit(2, "}")
        self.emit(2, "return %s.describe();" % h)
        self.emit(1, "}")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent.parent / "fixtures" / "corpus"))
    ap.add_argument("--files-per-repo", type=int, default=16)
    ap.add_argument("--seed", type=int, default=2024)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    out = pathlib.Path(args.out)
    for repo, words in sorted(DOMAINS.items()):
        d = out / repo
        d.mkdir(parents=True, exist_ok=True)
        names = set()
        while len(names) < args.files_per_repo:
            names.add(cap(rng.choice(words)) + cap(rng.choice(["manager", "tracker", "planner", "monitor", "registry", "report", "engine", "buffer", "router", "gauge"])))
        names = sorted(names)
        for cls in names:
            others = [n for n in names if n != cls]
            text = FileGen(rng, words, cls, others).generate()
            (d / (cls + ".java")).write_text(text)


if __name__ == "__main__":
    main()
