from rest_framework import serializers

from bounds.models.query import INF
from bounds.serializers.query import CountOrInfinityField
from hyperbolic.serializers.form import FormDescriptorSerializer, PointField
from hyperbolic.services.form_service import FormService
from partition.models.instance import Instance, InstanceSpec


class InstanceSerializer(serializers.Serializer):
    form = FormDescriptorSerializer()
    vectors = serializers.ListField(child=PointField(), allow_empty=False)
    k = serializers.IntegerField(min_value=1)
    eps = serializers.FloatField()
    r = CountOrInfinityField(default=INF)

    def validate_eps(self, value):
        if value <= 0:
            raise serializers.ValidationError("Must be positive.")
        return value

    def validate_vectors(self, value):
        lengths = {len(u) for u in value}
        if len(lengths) > 1:
            raise serializers.ValidationError("All vectors must have the same length.")
        return value

    def create(self, validated_data):
        form = FormService.builtin_form(validated_data['form'])
        return Instance.build(
            form, validated_data['vectors'],
            k=validated_data['k'], eps=validated_data['eps'], r=validated_data['r'],
        )

    def to_representation(self, instance):
        if isinstance(instance, Instance):
            instance = instance.descriptor()
        return super().to_representation(instance)


class InstanceSpecSerializer(serializers.Serializer):
    family = serializers.ChoiceField(choices=('product', 'symdet'))
    n = serializers.IntegerField(min_value=1)
    m = serializers.IntegerField(min_value=1)
    eps = serializers.FloatField()
    k = serializers.IntegerField(min_value=1, default=2)
    rank = serializers.IntegerField(min_value=1, default=1)
    split = serializers.ChoiceField(choices=('random', 'equal'), default='random')
    seed = serializers.IntegerField(allow_null=True, default=None)

    def validate_eps(self, value):
        if value <= 0:
            raise serializers.ValidationError("Must be positive.")
        return value

    def create(self, validated_data):
        return InstanceSpec(**validated_data)
