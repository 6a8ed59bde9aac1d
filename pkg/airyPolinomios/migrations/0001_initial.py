# Generated by Django 5.2.8 on 2026-10-17 12:00

import django.db.models.deletion
from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='CorridaVerificacion',
            fields=[
                ('id_corrida', models.AutoField(db_column='ID_Corrida', primary_key=True, serialize=False)),
                ('fecha', models.DateTimeField(auto_now_add=True, db_column='Fecha')),
                ('semilla', models.BigIntegerField(db_column='Semilla')),
                ('n_max', models.PositiveIntegerField(db_column='N_Max')),
                ('veredicto', models.BooleanField(db_column='Veredicto')),
                ('total_chequeos', models.PositiveIntegerField(db_column='Total_Chequeos')),
                ('fallidos', models.PositiveIntegerField(db_column='Fallidos', default=0)),
                ('duracion', models.FloatField(db_column='Duracion', help_text='Segundos')),
            ],
            options={
                'db_table': 'corrida_verificacion',
                'ordering': ('-fecha',),
            },
        ),
        migrations.CreateModel(
            name='RegistroChequeo',
            fields=[
                ('id_registro', models.AutoField(db_column='ID_Registro', primary_key=True, serialize=False)),
                ('chequeo', models.CharField(db_column='Check', max_length=60)),
                ('family', models.CharField(blank=True, db_column='Family', max_length=30)),
                ('n', models.IntegerField(blank=True, db_column='N', null=True)),
                ('status', models.CharField(choices=[('pass', 'Aprobado'), ('fail', 'Fallido')], db_column='Status', max_length=4)),
                ('lhs', models.TextField(blank=True, db_column='LHS')),
                ('rhs', models.TextField(blank=True, db_column='RHS')),
                ('rel_err', models.FloatField(blank=True, db_column='Rel_Err', null=True)),
                ('detail', models.TextField(blank=True, db_column='Detail')),
                ('corrida', models.ForeignKey(db_column='ID_Corrida', on_delete=django.db.models.deletion.CASCADE, related_name='registros', to='airyPolinomios.corridaverificacion')),
            ],
            options={
                'db_table': 'registro_chequeo',
                'ordering': ('corrida', 'id_registro'),
            },
        ),
    ]
