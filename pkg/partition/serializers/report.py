from rest_framework import serializers


class PartitionReportSerializer(serializers.Serializer):
    parts = serializers.ListField(child=serializers.ListField(child=serializers.IntegerField()))
    norms = serializers.ListField(child=serializers.FloatField())
    bound = serializers.FloatField()
    trajectory = serializers.ListField(child=serializers.FloatField())
    order = serializers.ListField(child=serializers.IntegerField())
    outside_theorem = serializers.BooleanField()
    wall_time = serializers.FloatField(allow_null=True, required=False)
    within_bound = serializers.BooleanField(read_only=True)
    trajectory_nonincreasing = serializers.BooleanField(read_only=True)
