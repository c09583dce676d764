"""Validate real relconv outputs against the JSON schemas: validate_outputs.py <relconv> <schema dir>."""

import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema
from referencing import Registry, Resource


def load_registry(schema_dir):
    schemas = {}
    for path in sorted(schema_dir.glob("*.schema.json")):
        doc = json.loads(path.read_text())
        jsonschema.Draft202012Validator.check_schema(doc)
        schemas[path.name] = doc
    registry = Registry().with_resources(
        (doc["$id"], Resource.from_contents(doc)) for doc in schemas.values()
    )
    return schemas, registry


def main():
    binary, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    schemas, registry = load_registry(schema_dir)
    failures = 0

    def check(name, doc, schema_file):
        nonlocal failures
        validator = jsonschema.Draft202012Validator(schemas[schema_file], registry=registry)
        errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.path))
        status = "ok" if not errors else "INVALID"
        print(f"{status}: {name} against {schema_file}")
        for err in errors[:5]:
            print(f"    {list(err.path)}: {err.message[:200]}")
        failures += bool(errors)

    with tempfile.TemporaryDirectory() as tmp:
        work = pathlib.Path(tmp)

        def run(*args, ok=(0,)):
            proc = subprocess.run([binary, *args], cwd=work, capture_output=True, text=True)
            if proc.returncode not in ok:
                raise SystemExit(f"relconv {' '.join(args)} exited {proc.returncode}: {proc.stderr[:400]}")
            return proc

        def doc(name):
            return json.loads((work / name).read_text())

        run("gen", "star", "--spines", "3", "--out", "star.json")
        run("gen", "arcs", "--n", "6", "--arcs", "0:3,2:5,4:1", "--out", "arcs.json")
        run("--seed", "4", "gen", "random", "--ambient", "grid_disk:4,3", "--m", "5", "--out", "rand.json")
        run("gen", "complex", "--name", "torus7", "--out", "torus.json")
        for name in ("star.json", "arcs.json", "rand.json"):
            check(name, doc(name), "family.schema.json")
        check("torus.json", doc("torus.json"), "complex.schema.json")
        check("gallery reference", {"gallery": "grid_disk", "params": [3, 3]}, "complex.schema.json")

        run("compute", "--family", "rand.json", "--invariants",
            "radon:cap=5,tverberg:k=3:cap=6,helly,caratheodory:cap=4,tc:inf,transversal:cap=4",
            "--out", "compute.json")
        run("homology", "--complex", "torus.json", "--out", "homology.json")
        run("nerve", "--family", "arcs.json", "--out", "nerve.json")
        run("fhelly", "--family", "rand.json", "--out", "fhelly.json")
        run("pq", "--family", "rand.json", "--p", "3", "--q", "2", "--out", "pq.json")
        run("bootstrap", "--family", "rand.json", "--k", "1", "--alpha1", "0.25", "--out", "bootstrap.json")
        run("gen", "complex", "--name", "cycle:3", "--out", "c3.json")
        run("gen", "complex", "--name", "grid_disk:3,3", "--out", "g33.json")
        run("chainmap", "search", "--source", "c3.json", "--target", "g33.json", "--cap", "2", "--out", "search.json")
        (work / "oracle.json").write_text(json.dumps({"ground": 9, "k": 2, "colors": 2, "kind": "random", "seed": 5}))
        run("ramsey", "select", "--oracle", "oracle.json", "--m", "2", "--n", "3", "--out", "select.json")
        run("verify", "--suite", "paper", "--only", "1,3,9a", "--out", "verify.json", ok=(0, 4))
        for name in ("compute.json", "homology.json", "nerve.json", "fhelly.json", "pq.json",
                     "bootstrap.json", "search.json", "select.json", "verify.json"):
            check(name, doc(name), "report.schema.json")

        found = doc("search.json")["result"]["map"]
        if found is not None:
            check("found chain map", found, "chain_map.schema.json")
        check("oracle.json", doc("oracle.json"), "oracle.schema.json")
        cert = doc("select.json")["result"]["certificate"]
        if cert is not None:
            check("selection certificate", cert, "selection_certificate.schema.json")
        config = {"generators": [{"family": "disks_on_surface", "params": [4], "ambient": "octahedron_sphere",
                                  "seeds": [1, 2]}],
                  "invariants": ["tc:k=1"], "output": {"csv": "c.csv", "reports_dir": "r"}, "jobs": 2}
        check("experiment config", config, "experiment_config.schema.json")
        (work / "cfg.json").write_text(json.dumps(config))
        run("corpus", "--config", "cfg.json")
        for report in sorted((work / "r").glob("*.json")):
            check(f"corpus report {report.name}", json.loads(report.read_text()), "report.schema.json")

    if failures:
        print(f"{failures} document(s) failed schema validation")
        return 1
    print("all documents valid")
    return 0


if __name__ == "__main__":
    sys.exit(main())
