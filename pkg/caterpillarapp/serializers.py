from rest_framework import serializers

from .exceptions import CaterpillarError
from .structures import (ColoredGraph, DegreeMatrix, Exists, NotExists,
                         Unknown)


class DegreeMatrixSerializer(serializers.Serializer):
    rows = serializers.ListField(
        child=serializers.ListField(child=serializers.IntegerField(min_value=0), allow_empty=False),
        allow_empty=False,
    )

    def validate_rows(self, rows):
        if len({len(row) for row in rows}) != 1:
            raise serializers.ValidationError('rows have different lengths')
        return rows

    def create(self, validated_data):
        return DegreeMatrix.from_rows(validated_data['rows'])

    def to_representation(self, instance):
        if isinstance(instance, DegreeMatrix):
            return {'rows': [list(row) for row in instance.rows]}
        return super().to_representation(instance)


class EdgeSerializer(serializers.Serializer):
    u = serializers.IntegerField(min_value=0)
    v = serializers.IntegerField(min_value=0)
    color = serializers.IntegerField(min_value=1)


class ColoredGraphSerializer(serializers.Serializer):
    n = serializers.IntegerField(min_value=0)
    edges = EdgeSerializer(many=True)

    def validate(self, attrs):
        try:
            attrs['graph'] = ColoredGraph(attrs['n'], (
                (edge['u'], edge['v'], edge['color']) for edge in attrs['edges']
            ))
        except CaterpillarError as error:
            raise serializers.ValidationError(str(error))
        return attrs

    def create(self, validated_data):
        return validated_data['graph']

    def to_representation(self, instance):
        if isinstance(instance, ColoredGraph):
            return {
                'n': instance.n,
                'edges': [{'u': e.u, 'v': e.v, 'color': e.color} for e in instance.edges()],
            }
        return super().to_representation(instance)


class TraceSerializer(serializers.Serializer):
    base = serializers.CharField()
    steps = serializers.SerializerMethodField()
    greedy = serializers.ListField(child=serializers.BooleanField())
    notes = serializers.ListField(child=serializers.CharField())

    def get_steps(self, trace):
        return [step.as_dict() for step in trace.steps]


class WitnessSerializer(serializers.Serializer):
    condition = serializers.CharField()
    message = serializers.CharField()
    detail = serializers.DictField()


class OutcomeSerializer(serializers.Serializer):
    """Read-only view of a realization outcome."""

    def to_representation(self, outcome):
        data = {'status': str(outcome.status)}
        if isinstance(outcome, Exists):
            data['graph'] = ColoredGraphSerializer(outcome.graph).data
            data['trace'] = TraceSerializer(outcome.trace).data
        elif isinstance(outcome, NotExists):
            data['witness'] = WitnessSerializer(outcome.witness).data
        elif isinstance(outcome, Unknown):
            data['reason'] = outcome.reason
        return data


class TwoTreeConditionsSerializer(serializers.Serializer):
    cond1 = serializers.BooleanField()
    cond2 = serializers.BooleanField()
    cond3 = serializers.BooleanField()
    d_max = serializers.IntegerField()
    s = serializers.ListField(child=serializers.IntegerField())
    ok = serializers.BooleanField()
    witness = serializers.SerializerMethodField()

    def get_witness(self, conditions):
        witness = conditions.witness()
        return WitnessSerializer(witness).data if witness is not None else None


class ValidationReportSerializer(serializers.Serializer):
    tree_rows = serializers.ListField(child=serializers.BooleanField())
    path_rows = serializers.ListField(child=serializers.BooleanField())
    common_leaf_columns = serializers.ListField(child=serializers.IntegerField())
    eligible = serializers.DictField(child=serializers.BooleanField())
    ok = serializers.BooleanField()


class SpineReportSerializer(serializers.Serializer):
    lengths = serializers.DictField(child=serializers.IntegerField())
    binding = serializers.ListField(child=serializers.CharField())


class EGReportSerializer(serializers.Serializer):
    graphical = serializers.BooleanField()
    parity_ok = serializers.BooleanField()
    first_violation_s = serializers.IntegerField(allow_null=True)
    lhs = serializers.IntegerField(allow_null=True)
    rhs = serializers.IntegerField(allow_null=True)


class VerificationReportSerializer(serializers.Serializer):
    ok = serializers.BooleanField()
    violation = serializers.CharField(allow_null=True)
    color = serializers.IntegerField(allow_null=True)
