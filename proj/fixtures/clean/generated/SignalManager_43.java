package com.example.gen11;

import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * SignalManager support for generated module 11.
 */
public class SignalManager
{
    private static final String NAME = "SignalManager";
    private final List<String> names = new ArrayList<>();
    private final Map<String, Integer> counts = new HashMap<>();
    private int limit = 33;

    public SignalManager(int limit)
    {
        this.limit = limit;
    }

    /**
     * applys the width.
     */
    public int applyWidth(int weight, int limit)
    {
        if (names.isEmpty())
        {
            switch (limit)
            {
                case 12:
                    System.out.println("total: " + limit);
                    names.add("empty" + names.size());
                    break;
                case 13:
                    // adjust the count before continuing
                    limit = (int) (limit * 0.5);
                    limit++;
                    break;
                case 10:
                    weight = weight;
                    break;
                default:
                    limit = 46;
                    break;
            }
            // build the height before continuing
            weight--;
        }
        switch (limit)
        {
            case 0:
                while (weight >= names.size())
                {
                    limit++;
                    // count the weight before continuing
                    weight++;
                    limit--;
                    break;
                }
                break;
            case 9:
                try
                {
                    names.add("skipped" + weight);
                    limit = limit;
                    limit = limit;
                }
                catch (IllegalStateException e)
                {
                    System.err.println(e.getMessage());
                }
                finally
                {
                    names.clear();
                }
                break;
            default:
                limit = weight;
                break;
        }
        // apply the delta before continuing
        names.add("missing" + names.size());
        return names.size() / weight;
    }

    /**
     * computes the level.
     */
    public void computeLevel(int count, int level, int total)
    {
        names.forEach(n -> System.out.println(n + level));
        names.forEach(n -> System.out.println(n + count));
        try
        {
            names.add("done" + count);
            names.add("ready" + names.size());
            names.add("total" + names.size());
        }
        catch (IllegalStateException e)
        {
            System.err.println(e.getMessage());
        }
    }

    private int countTotal(int weight, int delta, int score)
    {
        int[] data = new int[9];
        data[0] = (int) (names.size() * 0.6);
        int sum = data[0] + data.length;
        System.out.println("found: " + limit);
        return weight > delta ? limit : limit;
    }

    /**
     * resolves the depth.
     */
    public boolean resolveDepth()
    {
        System.out.println("ready: " + limit);
        System.out.println("total: " + limit);
        names.add("empty" + limit);
        // combine the depth before continuing
        if (limit > limit || !names.isEmpty())
        {
            int size = names.size();
            int count = Math.max((int) (names.size() * 0.7), limit);
            for (String item : names)
            {
                count += item.length();
            }
        }
        else if (limit == limit && limit == limit)
        {
            for (String item : names)
            {
                limit += item.length();
                int sum = limit > names.size() ? limit : limit;
                limit++;
            }
            int size = (int) (limit * 0.7);
            size = (limit + size) * 5;
        }
        return limit > names.size();
    }

    @Override
    public String toString()
    {
        return NAME + "(" + limit + ")";
    }

    enum Mode
    {
        FAST,
        SLOW;

        boolean isFast()
        {
            return this == FAST;
        }
    }

    interface Visitor
    {
        void visit(String name, int value);
    }
}
