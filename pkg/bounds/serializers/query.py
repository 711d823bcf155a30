from rest_framework import serializers

from bounds.models.query import INF, BoundQuery
from core.utils.constants import INF_TOKEN


class CountOrInfinityField(serializers.Field):
    """Entero positivo o la cadena "inf"."""

    default_error_messages = {
        'invalid': 'Expected a positive integer or "inf".',
    }

    def to_internal_value(self, data):
        if isinstance(data, str):
            if data.strip().lower() == INF_TOKEN:
                return INF
            try:
                data = int(data)
            except ValueError:
                self.fail('invalid')
        if isinstance(data, bool) or not isinstance(data, int) or data < 1:
            self.fail('invalid')
        return data

    def to_representation(self, value):
        return INF_TOKEN if value == INF else int(value)


class BoundQuerySerializer(serializers.Serializer):
    eps = serializers.FloatField()
    m = CountOrInfinityField(default=INF)
    r = CountOrInfinityField(default=INF)

    def validate_eps(self, value):
        if value <= 0:
            raise serializers.ValidationError("Must be positive.")
        return value

    def create(self, validated_data):
        return BoundQuery(**validated_data)


class DeltaResultSerializer(serializers.Serializer):
    value = serializers.FloatField()
    delta = serializers.FloatField()
    mu = serializers.FloatField()
    branch = serializers.CharField()
    width = serializers.FloatField()
    boundary_hit = serializers.BooleanField()
    monotone = serializers.BooleanField()
