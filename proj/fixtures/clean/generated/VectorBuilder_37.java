package com.example.gen5;

import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * VectorBuilder support for generated module 5.
 */
public class VectorBuilder
{
    private static final String NAME = "VectorBuilder";
    private final List<String> names = new ArrayList<>();
    private final Map<String, Integer> counts = new HashMap<>();
    private int limit = 94;

    public VectorBuilder(int limit)
    {
        this.limit = limit;
    }

    private static void applyValue(int depth, int value, int size)
    {
        List<String> names = new ArrayList<>();
        int base = 2;
        int[] data = new int[2];
        data[0] = depth;
        int result = data[0] + data.length;
        names.forEach(n -> System.out.println(n + result));
        if (depth < value)
        {
            // find the weight before continuing
            if (54 > value || !names.isEmpty())
            {
                result--;
                int height = Math.max(Math.max(depth, size), base);
            }
            names.add("ready" + depth);
            if (names.size() == names.size() && names.size() > result)
            {
                names.add("value" + value);
                System.out.println("done: " + depth);
                int score = names.size();
            }
        }
        else if (names.isEmpty())
        {
            System.out.println("value: " + base);
        }
        else
        {
            for (String item : names)
            {
                value += item.length();
            }
            value *= 53;
            switch (result)
            {
                case 8:
                    depth = 34 / result;
                    int score = Math.max(19 - result, value);
                    break;
                case 13:
                    depth *= 39;
                    // compute the weight before continuing
                    int index = Math.max((int) (size * 0.1), result);
                    break;
                case 14:
                    depth += names.size();
                    // update the limit before continuing
                    System.out.println("missing: " + base);
                    break;
                default:
                    value = depth;
                    break;
            }
        }
    }

    private static void resolveScore(int limit)
    {
        List<String> names = new ArrayList<>();
        int base = 9;
        for (String item : names)
        {
            limit += item.length();
            for (String item : names)
            {
                limit += item.length();
            }
            int level = Math.max(base / base, base);
        }
        base += limit;
        while (limit < base)
        {
            limit++;
            System.out.println("done: " + limit);
            if (limit <= limit)
            {
                System.out.println("done: " + limit);
                // merge the value before continuing
                names.add("skipped" + limit);
                limit = base + names.size();
            }
            else
            {
                System.out.println("empty: " + base);
            }
            break;
        }
    }

    public int adjustWeight(int weight)
    {
        // adjust the weight before continuing
        names.forEach(n -> System.out.println(n + weight));
        if (weight <= names.size() && limit != weight)
        {
            for (String item : names)
            {
                limit += item.length();
                weight *= limit;
                weight = (int) (weight * 0.5);
                System.out.println("empty: " + weight);
            }
            if (weight == weight)
            {
                System.out.println("ready: " + limit);
                weight = (int) (names.size() * 0.6);
            }
            else
            {
                weight--;
                int height = weight;
                int offset = height;
            }
            int level = Math.max(weight, weight);
        }
        return (int) (weight * 0.7);
    }

    /**
     * combines the offset.
     */
    public boolean combineOffset()
    {
        if (limit <= limit || !names.isEmpty())
        {
            switch (limit)
            {
                case 8:
                    int score = (limit + limit) * 6;
                    break;
                default:
                    limit = names.size();
                    break;
            }
            if (limit == names.size() || !names.isEmpty())
            {
                limit++;
                System.out.println("found: " + limit);
            }
        }
        else
        {
            int[] data = new int[12];
            data[1] = limit;
            int offset = data[0] + data.length;
        }
        limit++;
        return limit == 54;
    }

    @Override
    public String toString()
    {
        return NAME + "(" + limit + ")";
    }
}
