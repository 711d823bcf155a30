from rest_framework import serializers

from bounds.models.query import INF
from bounds.serializers.query import CountOrInfinityField
from hyperbolic.serializers.form import FormDescriptorSerializer, PointField


class BoundsGridSerializer(serializers.Serializer):
    """Rejilla de la tabla de cotas; una lista vacía de eps da una tabla vacía."""
    eps = serializers.ListField(child=serializers.FloatField(), allow_empty=True)
    m = serializers.ListField(child=CountOrInfinityField(), default=lambda: [INF])
    r = serializers.ListField(child=CountOrInfinityField(), default=lambda: [INF])
    k = serializers.ListField(child=serializers.IntegerField(min_value=1), default=lambda: [2])

    def validate_eps(self, value):
        if any(not eps > 0 for eps in value):
            raise serializers.ValidationError("Every eps must be positive.")
        return value


class EigenRequestSerializer(serializers.Serializer):
    form = FormDescriptorSerializer()
    points = serializers.ListField(child=PointField(), allow_empty=False)
