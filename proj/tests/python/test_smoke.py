# Copyright 2026 The ontoforge Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import json
import os
import pathlib
import subprocess

import pytest

import ontoforge

ROOT = pathlib.Path(__file__).resolve().parents[2]
FIXTURE = ROOT / "fixtures" / "computing-fragment.onto"


@pytest.fixture(scope="module")
def fixture_onto():
    return ontoforge.Ontology.parse(FIXTURE.read_text(encoding="utf-8"))


def test_fixture_loads(fixture_onto):
    assert len(fixture_onto) == 31
    assert len(fixture_onto.edges) == 45
    assert fixture_onto.roots() == ["informatika"]


def test_ranking_has_ten_levels(fixture_onto):
    ranking = fixture_onto.ranking()
    assert [level for level, _ in ranking] == list(range(1, 11))
    assert ranking[0][1] == ["informatika"]
    assert fixture_onto.levels()["informatika"] == 1


def test_source_and_json_round_trip(fixture_onto):
    assert ontoforge.Ontology.parse(fixture_onto.to_source()) == fixture_onto
    assert ontoforge.Ontology.from_json(fixture_onto.to_json()) == fixture_onto


def test_lint_reports_dicts(fixture_onto):
    diags = fixture_onto.lint()
    assert diags
    assert {"rule", "severity", "subject", "message", "suggestion"} <= set(diags[0])
    assert all(d["rule"] != "L4" for d in diags)
    assert fixture_onto.lint("rule.L1 = off\nrule.L3 = off\nrule.L5 = off\nrule.L7 = off\n") == []


def test_errors_carry_kinds():
    with pytest.raises(ontoforge.OntoforgeError) as info:
        ontoforge.Ontology.parse('ontology "t"\nconcept "A" {}\nedge "A" -whole_part-> "A"\n')
    assert info.value.kind == "SelfLoop"
    assert info.value.kinds == ["SelfLoop"]


def test_merge_with_itself(fixture_onto):
    merged, report = ontoforge.merge(fixture_onto, fixture_onto)
    assert merged == fixture_onto
    assert json.loads(report)["joined_on"] == ["informatika", "vychislitelnaya-tekhnika"]
    with pytest.raises(ValueError):
        ontoforge.merge(fixture_onto, fixture_onto, "whatever")


def test_turtle_parses_with_rdflib(fixture_onto):
    rdflib = pytest.importorskip("rdflib")
    graph = rdflib.Graph()
    graph.parse(data=fixture_onto.to_turtle(), format="turtle")
    owl_class = rdflib.URIRef("http://www.w3.org/2002/07/owl#Class")
    classes = set(graph.subjects(rdflib.RDF.type, owl_class))
    assert len(classes) == 31
    labels = {str(o) for o in graph.objects(None, rdflib.RDFS.label)}
    assert "Информатика" in labels


def test_in_process_cli_matches_the_executable():
    code, out, err = ontoforge.run_cli(["rank", str(FIXTURE)])
    assert code == 0 and err == ""
    exe = os.environ.get("ONTOFORGE_CLI")
    if not exe:
        pytest.skip("ONTOFORGE_CLI not set")
    proc = subprocess.run([exe, "rank", str(FIXTURE)], capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout == out
